use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group by its multiplication table `mult[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: usize,
    #[serde(default)]
    pub names: Vec<String>,
}

impl GroupTable {
    /// Verifies the group axioms; names default to `g0, g1, …`.
    pub fn new(mult: Vec<Vec<usize>>, names: Vec<String>) -> Result<GroupTable> {
        let n = mult.len();
        let cond = |name: &str, w: Vec<usize>| Error::Condition {
            name: name.into(),
            witness: w,
        };
        if n == 0
            || mult
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::Input(format!(
                "group table must be {n}x{n} with entries below {n}"
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| cond("identity", vec![]))?;
        for a in 0..n {
            if !(0..n).any(|b| mult[a][b] == identity && mult[b][a] == identity) {
                return Err(cond("inverses", vec![a]));
            }
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(cond("associativity", vec![a, b, c]));
                    }
                }
            }
        }
        let names = if names.len() == n {
            names
        } else {
            (0..n).map(|i| format!("g{i}")).collect()
        };
        Ok(GroupTable {
            order: n,
            mult,
            identity,
            names,
        })
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mult[a][b] == self.identity)
            .unwrap()
    }

    pub fn trivial() -> GroupTable {
        GroupTable::new(vec![vec![0]], vec!["e".into()]).unwrap()
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let names = (0..n)
            .map(|i| {
                if i == 0 {
                    "e".to_string()
                } else {
                    format!("r{i}")
                }
            })
            .collect();
        GroupTable::new(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            names,
        )
        .unwrap()
    }

    /// `Z2 × Z2` with elements `(a, b)` at index `2a + b`.
    pub fn klein() -> GroupTable {
        let names = ["e", "b", "a", "ab"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GroupTable::new(
            (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect(),
            names,
        )
        .unwrap()
    }

    /// Permutations of three points in lexicographic order.
    pub fn s3() -> GroupTable {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mult = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        let names = ["e", "(12)", "(01)", "(012)", "(021)", "(02)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GroupTable::new(mult, names).unwrap()
    }

    /// `⟨σ, τ | σ⁴ = τ² = 1, τστ = σ³⟩`; index `k + 4m` is `σ^k τ^m`.
    pub fn d8() -> GroupTable {
        let mult = (0..8)
            .map(|x: usize| {
                (0..8)
                    .map(|y: usize| {
                        let (k, m, l, n) = (x % 4, x / 4, y % 4, y / 4);
                        // τ^m σ^l = σ^{±l} τ^m
                        let l = if m == 1 { (4 - l) % 4 } else { l };
                        (k + l) % 4 + 4 * ((m + n) % 2)
                    })
                    .collect()
            })
            .collect();
        let names = ["1", "σ", "σ²", "σ³", "τ", "στ", "σ²τ", "σ³τ"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GroupTable::new(mult, names).unwrap()
    }

    pub fn by_name(name: &str) -> Result<GroupTable> {
        match name {
            "trivial" | "Z1" => Ok(GroupTable::trivial()),
            "Z2xZ2" | "V4" | "klein" => Ok(GroupTable::klein()),
            "S3" => Ok(GroupTable::s3()),
            "D8" => Ok(GroupTable::d8()),
            _ => match name.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n > 0 => Ok(GroupTable::cyclic(n)),
                _ => Err(Error::Input(format!("unknown group '{name}'"))),
            },
        }
    }

    /// Sorted element set of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.identity];
        let mut frontier = set.clone();
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        set
    }

    /// All subgroups, sorted by size then elements.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut subs: Vec<Vec<usize>> = vec![vec![self.identity]];
        let cyclic: Vec<Vec<usize>> = (0..self.order).map(|g| self.generated(&[g])).collect();
        let mut frontier = subs.clone();
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                let mut gens = h.clone();
                gens.extend(c);
                let j = self.generated(&gens);
                if !subs.contains(&j) {
                    subs.push(j.clone());
                    frontier.push(j);
                }
            }
        }
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        subs
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        (0..self.order).all(|g| {
            h.iter()
                .all(|&x| h.contains(&self.mul(self.mul(g, x), self.inv(g))))
        })
    }

    /// Left cosets `gH` as class labels: `class[g]` is the least element of `gH`.
    pub fn left_cosets(&self, h: &[usize]) -> Vec<usize> {
        (0..self.order)
            .map(|g| h.iter().map(|&x| self.mul(g, x)).min().unwrap())
            .collect()
    }

    /// Label such as `⟨σ², τ⟩` using a minimal generating list found greedily.
    pub fn subgroup_label(&self, h: &[usize]) -> String {
        if h.len() == 1 {
            return "1".into();
        }
        if h.len() == self.order {
            return "G".into();
        }
        let mut gens: Vec<usize> = Vec::new();
        let mut cur = vec![self.identity];
        while cur.len() < h.len() {
            let g = h
                .iter()
                .copied()
                .filter(|g| !cur.contains(g))
                .max_by_key(|&g| (self.generated(&[g]).len(), std::cmp::Reverse(g)))
                .unwrap();
            gens.push(g);
            cur = self.generated(&gens);
        }
        let names: Vec<&str> = gens.iter().map(|&g| self.names[g].as_str()).collect();
        format!("⟨{}⟩", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        assert_eq!(GroupTable::trivial().subgroups().len(), 1);
        assert_eq!(GroupTable::cyclic(2).subgroups().len(), 2);
        assert_eq!(GroupTable::klein().subgroups().len(), 5);
        assert_eq!(GroupTable::s3().subgroups().len(), 6);
        assert_eq!(GroupTable::d8().subgroups().len(), 10);
    }

    #[test]
    fn d8_relations() {
        let g = GroupTable::d8();
        let (s, t) = (1, 4);
        assert_eq!(g.generated(&[s]).len(), 4);
        assert_eq!(g.mul(g.mul(t, s), t), 3);
        assert!(!g.is_normal(&g.generated(&[t])));
        assert!(g.is_normal(&g.generated(&[2])));
    }

    #[test]
    fn bad_tables_are_rejected() {
        let err = GroupTable::new(vec![vec![0, 1], vec![1, 1]], vec![]).unwrap_err();
        assert!(matches!(err, Error::Condition { ref name, .. } if name == "inverses"));
        assert!(GroupTable::new(vec![vec![1, 0], vec![0, 0]], vec![]).is_err());
    }

    #[test]
    fn s3_is_nonabelian() {
        let g = GroupTable::s3();
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
        assert_eq!(g.subgroups().iter().filter(|h| g.is_normal(h)).count(), 3);
    }
}
