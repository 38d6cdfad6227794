//! Finite posets and lattices stored by their order matrix.

mod galois;

pub use galois::{adjoint_from, Adjoint, GaloisConn};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitePoset {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(elements: Vec<String>, leq: Vec<Vec<bool>>) -> Result<FinitePoset> {
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("order matrix is not {n}x{n}")));
        }
        let fail = |name: &str, w: Vec<usize>| {
            Err(Error::Condition {
                name: name.into(),
                witness: w,
            })
        };
        for i in 0..n {
            if !leq[i][i] {
                return fail("reflexivity", vec![i]);
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return fail("antisymmetry", vec![i, j]);
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return fail("transitivity", vec![i, j, k]);
                    }
                }
            }
        }
        Ok(FinitePoset { elements, leq })
    }

    pub fn from_fn(elements: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Result<FinitePoset> {
        let n = elements.len();
        let leq = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        FinitePoset::new(elements, leq)
    }

    /// A chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> FinitePoset {
        FinitePoset::from_fn((0..n).map(|i| i.to_string()).collect(), |i, j| i <= j).unwrap()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    pub fn dual(&self) -> FinitePoset {
        let n = self.len();
        let leq = (0..n)
            .map(|i| (0..n).map(|j| self.leq[j][i]).collect())
            .collect();
        FinitePoset {
            elements: self.elements.clone(),
            leq,
        }
    }

    /// Pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Least element of the set of upper bounds of `set`.
    pub fn sup(&self, set: &[usize]) -> Option<usize> {
        let ubs: Vec<usize> = (0..self.len())
            .filter(|&u| set.iter().all(|&s| self.le(s, u)))
            .collect();
        ubs.iter()
            .copied()
            .find(|&u| ubs.iter().all(|&v| self.le(u, v)))
    }

    pub fn inf(&self, set: &[usize]) -> Option<usize> {
        let lbs: Vec<usize> = (0..self.len())
            .filter(|&l| set.iter().all(|&s| self.le(l, s)))
            .collect();
        lbs.iter()
            .copied()
            .find(|&l| lbs.iter().all(|&v| self.le(v, l)))
    }

    /// The induced order on a subset, with elements kept in the given order.
    pub fn restrict(&self, idx: &[usize]) -> FinitePoset {
        FinitePoset {
            elements: idx.iter().map(|&i| self.elements[i].clone()).collect(),
            leq: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.leq[i][j]).collect())
                .collect(),
        }
    }

    /// Hasse diagram in DOT: one node per line sorted by label, `a -> b` for `a ⋖ b`.
    pub fn export_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", escape(name));
        let mut nodes: Vec<&String> = self.elements.iter().collect();
        nodes.sort();
        for n in nodes {
            out.push_str(&format!("  \"{}\";\n", escape(n)));
        }
        let mut edges: Vec<(&String, &String)> = self
            .covers()
            .into_iter()
            .map(|(a, b)| (&self.elements[a], &self.elements[b]))
            .collect();
        edges.sort();
        for (a, b) in edges {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", escape(a), escape(b)));
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteLattice {
    pub poset: FinitePoset,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub top: usize,
    pub bottom: usize,
}

/// A verdict with the least 5-element sublattice witness against it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularityReport {
    pub modular: Verdict,
    pub distributive: Verdict,
}

pub const SUBLATTICE_SCAN_CAP: usize = 64;

impl CompleteLattice {
    pub fn new(poset: FinitePoset) -> Result<CompleteLattice> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::Input("the empty poset is not a lattice".into()));
        }
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                join[i][j] = poset.sup(&[i, j]).ok_or(Error::Condition {
                    name: "join exists".into(),
                    witness: vec![i, j],
                })?;
                meet[i][j] = poset.inf(&[i, j]).ok_or(Error::Condition {
                    name: "meet exists".into(),
                    witness: vec![i, j],
                })?;
            }
        }
        let top = poset.sup(&(0..n).collect::<Vec<_>>()).unwrap();
        let bottom = poset.inf(&(0..n).collect::<Vec<_>>()).unwrap();
        Ok(CompleteLattice {
            poset,
            join,
            meet,
            top,
            bottom,
        })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn sup(&self, set: &[usize]) -> usize {
        set.iter().fold(self.bottom, |a, &b| self.join[a][b])
    }

    pub fn inf(&self, set: &[usize]) -> usize {
        set.iter().fold(self.top, |a, &b| self.meet[a][b])
    }

    /// Classifies a sorted 5-subset: `Some(true)` for M3, `Some(false)` for N5.
    fn classify(&self, s: &[usize; 5]) -> Option<bool> {
        let bot = self.inf(s);
        let top = self.sup(s);
        if !s.contains(&bot) || !s.contains(&top) {
            return None;
        }
        for a in s {
            for b in s {
                if !s.contains(&self.join[*a][*b]) || !s.contains(&self.meet[*a][*b]) {
                    return None;
                }
            }
        }
        let mid: Vec<usize> = s
            .iter()
            .copied()
            .filter(|&x| x != bot && x != top)
            .collect();
        let comparable = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| self.poset.le(mid[i], mid[j]) || self.poset.le(mid[j], mid[i]))
            .count();
        match comparable {
            0 => Some(true),
            1 => Some(false),
            _ => None,
        }
    }

    /// Lexicographically least sorted 5-subset of the given shape.
    fn least_sublattice(&self, m3: bool) -> Option<Vec<usize>> {
        let n = self.len();
        let search_from = |a: usize| -> Option<[usize; 5]> {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for e in d + 1..n {
                            let s = [a, b, c, d, e];
                            if self.classify(&s) == Some(m3) {
                                return Some(s);
                            }
                        }
                    }
                }
            }
            None
        };
        let first = par::find_first(n, |a| search_from(a).is_some())?;
        search_from(first).map(|s| s.to_vec())
    }

    /// Modular iff no N5 sublattice; distributive iff additionally no M3.
    pub fn check_modular_distributive(&self) -> Result<ModularityReport> {
        if self.len() > SUBLATTICE_SCAN_CAP {
            return Err(Error::EnumerationCap(SUBLATTICE_SCAN_CAP));
        }
        let n5 = self.least_sublattice(false);
        let m3 = self.least_sublattice(true);
        let modular = Verdict {
            holds: n5.is_none(),
            witness: n5.clone(),
        };
        let distributive = Verdict {
            holds: n5.is_none() && m3.is_none(),
            witness: n5.or(m3),
        };
        Ok(ModularityReport {
            modular,
            distributive,
        })
    }
}
