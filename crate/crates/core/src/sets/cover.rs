use super::cover_number::{CoverNumber, CoverOutcome};
use super::{ElementSet, SetFamily, TraceFamily, Universe};
use crate::error::{Error, Result};

/// One color class of a cover: either an explicit member list or a
/// trace-defined family that is never materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Color {
    Explicit(SetFamily),
    Trace(TraceFamily),
}

impl Color {
    pub fn universe(&self) -> Universe {
        match self {
            Color::Explicit(f) => f.universe(),
            Color::Trace(t) => t.universe(),
        }
    }

    #[inline]
    pub fn contains(&self, set: &ElementSet) -> bool {
        match self {
            Color::Explicit(f) => f.contains(set),
            Color::Trace(t) => t.contains(set),
        }
    }

    pub fn size(&self) -> u128 {
        match self {
            Color::Explicit(f) => f.len() as u128,
            Color::Trace(t) => t.size(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Color::Explicit(f) => f.is_empty(),
            Color::Trace(t) => t.is_empty(),
        }
    }

    pub fn disjoint_pair(&self) -> Option<(ElementSet, ElementSet)> {
        match self {
            Color::Explicit(f) => f.disjoint_pair(),
            Color::Trace(t) => t.disjoint_pair(),
        }
    }

    pub fn is_intersecting(&self) -> bool {
        self.disjoint_pair().is_none()
    }

    pub fn centers(&self) -> Result<ElementSet> {
        match self {
            Color::Explicit(f) => f.centers(),
            Color::Trace(t) => t.centers().ok_or(Error::NoMembers),
        }
    }

    pub fn cover_number(&self, cap: Option<usize>) -> CoverOutcome {
        match self {
            Color::Explicit(f) => f.cover_number(cap),
            Color::Trace(t) => {
                let c: CoverNumber = t.cover_number();
                match cap {
                    Some(cap) if c.tau > cap => CoverOutcome::ExceedsCap { cap },
                    _ => CoverOutcome::Exact(c),
                }
            }
        }
    }

    pub fn materialize(&self) -> SetFamily {
        match self {
            Color::Explicit(f) => f.clone(),
            Color::Trace(t) => t.materialize(),
        }
    }
}

impl From<SetFamily> for Color {
    fn from(f: SetFamily) -> Self {
        Color::Explicit(f)
    }
}

impl From<TraceFamily> for Color {
    fn from(t: TraceFamily) -> Self {
        Color::Trace(t)
    }
}

/// An ordered list of colors claimed to cover `C([n], k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCover {
    universe: Universe,
    colors: Vec<Color>,
    provenance: String,
}

impl LabeledCover {
    pub fn new(universe: Universe, colors: Vec<Color>, provenance: impl Into<String>) -> Result<Self> {
        for c in &colors {
            let cu = c.universe();
            if cu.n != universe.n {
                return Err(Error::IncompatibleUniverses {
                    left: universe.n,
                    right: cu.n,
                });
            }
            if let Color::Explicit(f) = c {
                if !f.is_empty() && f.uniform() != Some(universe.k) {
                    return Err(Error::InvalidParameter(format!(
                        "color is not {}-uniform",
                        universe.k
                    )));
                }
            } else if cu.k != universe.k {
                return Err(Error::InvalidParameter(format!(
                    "color is {}-uniform, cover expects {}",
                    cu.k, universe.k
                )));
            }
        }
        Ok(Self {
            universe,
            colors,
            provenance: provenance.into(),
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Index of the first color containing `set`.
    #[inline]
    pub fn first_color_of(&self, set: &ElementSet) -> Option<usize> {
        self.colors.iter().position(|c| c.contains(set))
    }

    /// Same cover with every color listed explicitly.
    pub fn materialized(&self) -> LabeledCover {
        LabeledCover {
            universe: self.universe,
            colors: self.colors.iter().map(|c| Color::Explicit(c.materialize())).collect(),
            provenance: self.provenance.clone(),
        }
    }
}
