//! Plain-text formats for families, covers and graphs.
//!
//! Family: header `n k m`, then `m` lines of strictly increasing 1-indexed
//! elements separated by single spaces.
//!
//! Cover: header `n k t`, then `t` blocks, each a line `color <id> <m_i>`
//! followed by `m_i` set lines.
//!
//! Graph: header `n e`, then `e` lines `u v` with `1 <= u < v <= n`.
//!
//! Output is UTF-8 with LF line endings and no trailing whitespace.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::sets::{Color, ElementSet, LabeledCover, SetFamily, Universe};

fn set_line(out: &mut String, s: &ElementSet) {
    for (i, e) in s.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{e}");
    }
    out.push('\n');
}

pub fn family_to_string(f: &SetFamily) -> String {
    let u = f.universe();
    let mut out = format!("{} {} {}\n", u.n, u.k, f.len());
    for m in f {
        set_line(&mut out, m);
    }
    out
}

/// Colors are listed explicitly; trace colors are materialized.
pub fn cover_to_string(c: &LabeledCover) -> String {
    let u = c.universe();
    let mut out = format!("{} {} {}\n", u.n, u.k, c.len());
    for (i, color) in c.colors().iter().enumerate() {
        let fam = color.materialize();
        let _ = writeln!(out, "color {} {}", i + 1, fam.len());
        for m in &fam {
            set_line(&mut out, m);
        }
    }
    out
}

pub fn graph_to_string(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
        }
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, l)) => Ok((i + 1, l)),
            None => Err(Error::Parse {
                line: 0,
                message: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn finish(&mut self) -> Result<()> {
        for (i, l) in self.inner.by_ref() {
            if !l.trim().is_empty() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "trailing content".into(),
                });
            }
        }
        Ok(())
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a non-negative integer: {t:?}"),
            })
        })
        .collect()
}

fn parse_header(lines: &mut Lines<'_>, arity: usize, what: &str) -> Result<Vec<usize>> {
    let (line, text) = lines.next_line(what)?;
    let nums = parse_numbers(line, text)?;
    if nums.len() != arity {
        return Err(Error::Parse {
            line,
            message: format!("expected {what} with {arity} fields"),
        });
    }
    Ok(nums)
}

fn parse_set(lines: &mut Lines<'_>, n: usize) -> Result<ElementSet> {
    let (line, text) = lines.next_line("a set line")?;
    let elems = parse_numbers(line, text)?;
    if elems.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse {
            line,
            message: "elements must be strictly increasing".into(),
        });
    }
    ElementSet::from_elements(n, elems).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let mut lines = Lines::new(text);
    let h = parse_header(&mut lines, 3, "header `n k m`")?;
    let (n, k, m) = (h[0], h[1], h[2]);
    let u = Universe::new(n, k)?;
    let sets = (0..m)
        .map(|_| parse_set(&mut lines, n))
        .collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    SetFamily::new(u, sets)
}

pub fn parse_cover(text: &str) -> Result<LabeledCover> {
    let mut lines = Lines::new(text);
    let h = parse_header(&mut lines, 3, "header `n k t`")?;
    let (n, k, t) = (h[0], h[1], h[2]);
    let u = Universe::new(n, k)?;
    let mut colors = Vec::with_capacity(t);
    for _ in 0..t {
        let (line, text) = lines.next_line("a color header")?;
        let mut parts = text.split_whitespace();
        if parts.next() != Some("color") {
            return Err(Error::Parse {
                line,
                message: "expected `color <id> <m>`".into(),
            });
        }
        let rest: Vec<&str> = parts.collect();
        let nums = parse_numbers(line, &rest.join(" "))?;
        if nums.len() != 2 {
            return Err(Error::Parse {
                line,
                message: "expected `color <id> <m>`".into(),
            });
        }
        let sets = (0..nums[1])
            .map(|_| parse_set(&mut lines, n))
            .collect::<Result<Vec<_>>>()?;
        let fam = SetFamily::new(u, sets)?;
        if !fam.is_empty() && fam.uniform() != Some(k) {
            return Err(Error::Parse {
                line,
                message: format!("color {} is not {k}-uniform", nums[0]),
            });
        }
        colors.push(Color::Explicit(fam));
    }
    lines.finish()?;
    LabeledCover::new(u, colors, "file")
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = Lines::new(text);
    let h = parse_header(&mut lines, 2, "header `n e`")?;
    let (n, e) = (h[0], h[1]);
    let mut g = SimpleGraph::empty(n)?;
    for _ in 0..e {
        let (line, text) = lines.next_line("an edge line")?;
        let nums = parse_numbers(line, text)?;
        if nums.len() != 2 || nums[0] >= nums[1] {
            return Err(Error::Parse {
                line,
                message: "expected `u v` with u < v".into(),
            });
        }
        g.add_edge(nums[0], nums[1]).map_err(|err| Error::Parse {
            line,
            message: err.to_string(),
        })?;
    }
    lines.finish()?;
    if g.edge_count() != e {
        return Err(Error::Parse {
            line: 1,
            message: "duplicate edges".into(),
        });
    }
    Ok(g)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = io::BufWriter::new(std::fs::File::create(path)?);
    f.write_all(text.as_bytes())?;
    f.flush()?;
    Ok(())
}

pub fn read_text(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}
