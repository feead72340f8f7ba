//! Simple graphs on `[n]`: exact clique counts, independent k-sets, densities
//! and the clique-density inequality of Khadžiivanov and Nikiforov.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::sets::{mask_below, ElementSet, SetFamily, Universe, MAX_ELEMENTS};

/// Graph on vertices `1..=n` stored as symmetric adjacency bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u128>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(Self {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    /// Cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Self::from_edges(n, edges)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Uniformly random graph with exactly `m` edges.
    pub fn random_with_edges<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        if m > pairs.len() {
            return Err(invalid(format!("{m} edges do not fit on {n} vertices")));
        }
        let chosen = rand::seq::index::sample(rng, pairs.len(), m);
        Self::from_edges(n, chosen.iter().map(|i| pairs[i]))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x == 0 || x > self.n {
                return Err(Error::ElementOutOfRange { element: x, n: self.n });
            }
        }
        if u == v {
            return Err(invalid(format!("self-loop at {u}")));
        }
        if self.adj[u - 1] >> (v - 1) & 1 == 0 {
            self.adj[u - 1] |= 1u128 << (v - 1);
            self.adj[v - 1] |= 1u128 << (u - 1);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> ElementSet {
        ElementSet::from_bits_unchecked(self.n, self.adj[v - 1])
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 1..=self.n {
            let higher = self.adj[u - 1] & !mask_below(u);
            out.extend(ElementSet::from_bits_unchecked(self.n, higher).iter().map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Self {
        let full = mask_below(self.n);
        let adj: Vec<u128> = (0..self.n)
            .map(|i| !self.adj[i] & full & !(1u128 << i))
            .collect();
        let total = self.n * self.n.saturating_sub(1) / 2;
        Self {
            n: self.n,
            adj,
            edge_count: total - self.edge_count,
        }
    }

    /// Subgraph induced on `x`, relabelled `1..=|x|` in increasing order.
    pub fn induced_subgraph(&self, x: &ElementSet) -> Self {
        let keep = x.to_vec();
        let mut g = Self::empty(keep.len()).expect("subgraph is smaller");
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i + 1, j + 1).expect("in range");
                }
            }
        }
        g
    }

    /// True iff no edge has both ends in `s`.
    pub fn is_independent(&self, s: &ElementSet) -> bool {
        s.iter().all(|v| self.adj[v - 1] & s.bits() == 0)
    }

    /// `|E| / n^2`.
    pub fn density(&self) -> BigRational {
        if self.n == 0 {
            return BigRational::zero();
        }
        BigRational::new(BigInt::from(self.edge_count), BigInt::from(self.n * self.n))
    }

    /// Vertex order by repeatedly removing a minimum-degree vertex.
    fn degeneracy_order(&self) -> Vec<usize> {
        let mut alive = mask_below(self.n);
        let mut order = Vec::with_capacity(self.n);
        while alive != 0 {
            let mut best = usize::MAX;
            let mut best_deg = u32::MAX;
            let mut b = alive;
            while b != 0 {
                let v = b.trailing_zeros() as usize;
                b &= b - 1;
                let d = (self.adj[v] & alive).count_ones();
                if d < best_deg {
                    best_deg = d;
                    best = v;
                }
            }
            order.push(best);
            alive &= !(1u128 << best);
        }
        order
    }

    /// Exact number of r-vertex cliques.
    pub fn count_cliques(&self, r: usize) -> Result<u128> {
        if r == 0 {
            return Err(invalid("clique size must be at least 1"));
        }
        if r > self.n {
            return Ok(0);
        }
        // relabel along a degeneracy order so that forward neighbourhoods are small
        let order = self.degeneracy_order();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let forward: Vec<u128> = order
            .iter()
            .map(|&v| {
                let mut row = 0u128;
                let mut b = self.adj[v];
                while b != 0 {
                    let w = b.trailing_zeros() as usize;
                    b &= b - 1;
                    if pos[w] > pos[v] {
                        row |= 1u128 << pos[w];
                    }
                }
                row
            })
            .collect();
        let total = (0..self.n)
            .into_par_iter()
            .map(|v| count_from(&forward, forward[v], r - 1))
            .sum();
        Ok(total)
    }

    /// Counts independent k-sets containing `include` and avoiding `exclude`.
    pub fn count_independent(&self, k: usize, include: &ElementSet, exclude: &ElementSet) -> u128 {
        let Some(cand) = self.candidates(k, include, exclude) else {
            return 0;
        };
        let need = k - include.len();
        let rows = self.complement_rows();
        if need == 0 {
            return 1;
        }
        // independent sets of G are cliques of the complement; count cliques in
        // the candidate set by ascending vertex order
        let verts: Vec<usize> = ElementSet::from_bits_unchecked(self.n, cand)
            .iter()
            .map(|v| v - 1)
            .collect();
        verts
            .par_iter()
            .map(|&v| {
                let later = cand & !mask_below(v + 1);
                count_from_masked(&rows, rows[v] & later, need - 1)
            })
            .sum()
    }

    /// Collects the independent k-sets containing `include` and avoiding `exclude`.
    pub fn independent_sets(&self, k: usize, include: &ElementSet, exclude: &ElementSet) -> Vec<ElementSet> {
        let mut out = Vec::new();
        self.visit_independent(k, include, exclude, |s| out.push(*s));
        out.sort_unstable();
        out
    }

    pub fn visit_independent<F: FnMut(&ElementSet)>(
        &self,
        k: usize,
        include: &ElementSet,
        exclude: &ElementSet,
        mut visit: F,
    ) {
        let Some(cand) = self.candidates(k, include, exclude) else {
            return;
        };
        let rows = self.complement_rows();
        let need = k - include.len();
        collect_from(&rows, cand, need, include.bits(), &mut |bits| {
            visit(&ElementSet::from_bits_unchecked(self.n, bits))
        });
    }

    fn candidates(&self, k: usize, include: &ElementSet, exclude: &ElementSet) -> Option<u128> {
        if include.len() > k || include.intersects(exclude) || !self.is_independent(include) {
            return None;
        }
        let mut cand = mask_below(self.n) & !include.bits() & !exclude.bits();
        for v in include.iter() {
            cand &= !self.adj[v - 1];
        }
        Some(cand)
    }

    fn complement_rows(&self) -> Vec<u128> {
        let full = mask_below(self.n);
        (0..self.n)
            .map(|i| !self.adj[i] & full & !(1u128 << i))
            .collect()
    }

    /// Exact number of independent k-sets, `|I(G)|`.
    pub fn count_independent_ksets(&self, k: usize) -> u128 {
        let e = ElementSet::empty(self.n);
        self.count_independent(k, &e, &e)
    }

    /// `I(G)` as a family on `C([n], k)`.
    pub fn independent_family(&self, k: usize) -> Result<SetFamily> {
        let e = ElementSet::empty(self.n);
        SetFamily::new(Universe::new(self.n, k)?, self.independent_sets(k, &e, &e))
    }

    pub fn stats(&self, r_max: usize) -> Result<GraphStats> {
        let gamma = self.density();
        let rho = self.complement().density();
        let clique_counts = (1..=r_max.min(self.n))
            .map(|r| self.count_cliques(r))
            .collect::<Result<Vec<_>>>()?;
        Ok(GraphStats {
            gamma,
            rho,
            clique_counts,
        })
    }
}

/// Cliques of size `need` inside `cand`, using forward rows (higher positions only).
fn count_from(forward: &[u128], cand: u128, need: usize) -> u128 {
    if need == 0 {
        return 1;
    }
    if (cand.count_ones() as usize) < need {
        return 0;
    }
    if need == 1 {
        return cand.count_ones() as u128;
    }
    let mut total = 0;
    let mut b = cand;
    while b != 0 {
        let v = b.trailing_zeros() as usize;
        b &= b - 1;
        total += count_from(forward, cand & forward[v], need - 1);
    }
    total
}

/// Cliques of size `need` in `cand` for symmetric rows, visiting vertices in
/// increasing order.
fn count_from_masked(rows: &[u128], cand: u128, need: usize) -> u128 {
    if need == 0 {
        return 1;
    }
    if (cand.count_ones() as usize) < need {
        return 0;
    }
    if need == 1 {
        return cand.count_ones() as u128;
    }
    let mut total = 0;
    let mut b = cand;
    while b != 0 {
        let v = b.trailing_zeros() as usize;
        b &= b - 1;
        total += count_from_masked(rows, b & rows[v], need - 1);
    }
    total
}

fn collect_from(rows: &[u128], cand: u128, need: usize, acc: u128, out: &mut dyn FnMut(u128)) {
    if need == 0 {
        out(acc);
        return;
    }
    if (cand.count_ones() as usize) < need {
        return;
    }
    let mut b = cand;
    while b != 0 {
        let v = b.trailing_zeros() as usize;
        b &= b - 1;
        collect_from(rows, b & rows[v], need - 1, acc | 1u128 << v, out);
    }
}

/// Densities and clique counts `N_1..N_r` of a graph.
/// Serialized as `{n, edges}`.
impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SimpleGraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    /// `|E| / n^2`
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub gamma: BigRational,
    /// `|E(complement)| / n^2`
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub rho: BigRational,
    /// `clique_counts[r - 1] = N_r`
    #[serde(serialize_with = "crate::report::ser_u128_vec")]
    pub clique_counts: Vec<u128>,
}

/// Outcome of checking `N_r >= ((2(r-1)γ - (r-2)) / r) · n · N_{r-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnrCheck {
    pub r: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub gamma: BigRational,
    /// `γ >= (r-2) / (2(r-1))`
    pub applicable: bool,
    #[serde(serialize_with = "crate::report::ser_u128")]
    pub lhs: u128,
    #[serde(serialize_with = "crate::report::ser_u128")]
    pub lower_clique_count: u128,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub rhs: Option<BigRational>,
    /// `lhs >= rhs` and `N_{r-1} > 0`; vacuously true when not applicable.
    pub holds: bool,
}

pub fn knr_check(g: &SimpleGraph, r: usize) -> Result<KnrCheck> {
    if r < 2 {
        return Err(invalid("clique-density inequality needs r >= 2"));
    }
    let gamma = g.density();
    let rr = BigInt::from(r);
    let threshold = BigRational::new(BigInt::from(r - 2), BigInt::from(2 * (r - 1)));
    let applicable = gamma >= threshold;
    let lhs = g.count_cliques(r)?;
    let lower = g.count_cliques(r - 1)?;
    if !applicable {
        return Ok(KnrCheck {
            r,
            gamma,
            applicable,
            lhs,
            lower_clique_count: lower,
            rhs: None,
            holds: true,
        });
    }
    let two_r1 = BigRational::from_integer(BigInt::from(2 * (r - 1)));
    let coeff = (two_r1 * &gamma - BigRational::from_integer(BigInt::from(r - 2)))
        / BigRational::from_integer(rr);
    let rhs = coeff
        * BigRational::from_integer(BigInt::from(g.n()))
        * BigRational::from_integer(BigInt::from(lower));
    let holds = BigRational::from_integer(BigInt::from(lhs)) >= rhs && lower > 0;
    Ok(KnrCheck {
        r,
        gamma,
        applicable,
        lhs,
        lower_clique_count: lower,
        rhs: Some(rhs),
        holds,
    })
}

impl KnrCheck {
    pub fn is_equality(&self) -> bool {
        self.rhs
            .as_ref()
            .is_some_and(|b| *b == BigRational::from_integer(BigInt::from(self.lhs)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::KSets;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_cliques(g: &SimpleGraph, r: usize) -> u128 {
        KSets::new(Universe::new(g.n(), r).unwrap())
            .filter(|s| {
                let v = s.to_vec();
                v.iter()
                    .enumerate()
                    .all(|(i, &a)| v[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .count() as u128
    }

    #[test]
    fn clique_count_examples() {
        assert_eq!(SimpleGraph::complete(5).unwrap().count_cliques(3).unwrap(), 10);
        assert_eq!(SimpleGraph::empty(7).unwrap().count_cliques(2).unwrap(), 0);
        let mut k4 = SimpleGraph::complete(4).unwrap().complement();
        for (u, v) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)] {
            k4.add_edge(u, v).unwrap();
        }
        assert_eq!(k4.edge_count(), 5);
        assert_eq!(k4.count_cliques(3).unwrap(), 2);
        assert!(SimpleGraph::empty(3).unwrap().count_cliques(0).is_err());
    }

    #[test]
    fn clique_counts_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let g = SimpleGraph::random_gnp(&mut rng, 10, 0.5).unwrap();
            for r in 1..=5 {
                assert_eq!(g.count_cliques(r).unwrap(), brute_cliques(&g, r));
            }
        }
    }

    #[test]
    fn independent_sets_are_complement_cliques() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [5, 8, 12] {
            let g = SimpleGraph::random_gnp(&mut rng, n, 0.4).unwrap();
            let c = g.complement();
            for r in 1..=4 {
                assert_eq!(g.count_independent_ksets(r), c.count_cliques(r).unwrap());
                assert_eq!(
                    g.independent_family(r).unwrap().len() as u128,
                    g.count_independent_ksets(r)
                );
            }
        }
    }

    #[test]
    fn independent_examples() {
        assert_eq!(SimpleGraph::empty(8).unwrap().count_independent_ksets(3), 56);
        assert_eq!(SimpleGraph::complete(6).unwrap().count_independent_ksets(2), 0);
        assert_eq!(SimpleGraph::cycle(5).unwrap().count_independent_ksets(2), 5);
    }

    #[test]
    fn restricted_independent_counts() {
        let g = SimpleGraph::cycle(6).unwrap();
        let inc = ElementSet::from_elements(6, [1]).unwrap();
        let exc = ElementSet::from_elements(6, [3]).unwrap();
        // independent 2-sets of C6 containing 1, avoiding 3: {1,4},{1,5}
        assert_eq!(g.count_independent(2, &inc, &exc), 2);
        let sets = g.independent_sets(2, &inc, &exc);
        assert_eq!(sets.len(), 2);
        let bad = ElementSet::from_elements(6, [1, 2]).unwrap();
        assert_eq!(g.count_independent(3, &bad, &ElementSet::empty(6)), 0);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(SimpleGraph::empty(4).unwrap().complement(), SimpleGraph::complete(4).unwrap());
        assert_eq!(SimpleGraph::complete(4).unwrap().complement().edge_count(), 0);
        let c5 = SimpleGraph::cycle(5).unwrap();
        let comp = c5.complement();
        // the complement of C5 is the pentagram 1-3-5-2-4-1
        let relabel = [1, 3, 5, 2, 4];
        for i in 0..5 {
            assert!(comp.has_edge(relabel[i], relabel[(i + 1) % 5]));
        }
        assert_eq!(comp.edge_count(), 5);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = SimpleGraph::cycle(6).unwrap();
        let x = ElementSet::from_elements(6, [2, 3, 5]).unwrap();
        let h = g.induced_subgraph(&x);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
    }

    #[test]
    fn knr_examples() {
        let k5 = SimpleGraph::complete(5).unwrap();
        let c = knr_check(&k5, 3).unwrap();
        assert!(c.applicable && c.holds && c.is_equality());
        assert_eq!(c.rhs.unwrap(), BigRational::from_integer(BigInt::from(10)));

        let e = knr_check(&SimpleGraph::empty(6).unwrap(), 3).unwrap();
        assert!(!e.applicable);

        let k10 = knr_check(&SimpleGraph::complete(10).unwrap(), 4).unwrap();
        assert!(k10.applicable && k10.holds);
    }

    #[test]
    fn stats_fields() {
        let s = SimpleGraph::cycle(5).unwrap().stats(3).unwrap();
        assert_eq!(s.clique_counts, vec![5, 5, 0]);
        assert_eq!(s.gamma, BigRational::new(5.into(), 25.into()));
        assert_eq!(s.rho, BigRational::new(5.into(), 25.into()));
    }
}
