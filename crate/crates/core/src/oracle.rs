//! Exponential ground truth for `f_k(G)` and k-feasibility.
//!
//! Deletion sets are enumerated by size, then lexicographically within a
//! size, so the first hit is minimal and the reported set is the
//! lexicographically smallest minimal one.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_FK_GUARD: usize = 16;
pub const DEFAULT_FEASIBLE_GUARD: usize = 20;
/// Width of the bitset representation.
const HARD_LIMIT: usize = 64;

#[derive(Clone, Debug)]
pub struct OracleFk {
    pub value: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    /// Vertex set of an induced subgraph with at least `k` vertices at its
    /// maximum degree.
    pub witness: Option<Vec<Vertex>>,
}

fn check_inputs(g: &Graph, k: usize, max_n: usize) -> Result<Vec<u64>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if g.n() > max_n.min(HARD_LIMIT) {
        return Err(Error::GuardExceeded {
            n: g.n(),
            max_n: max_n.min(HARD_LIMIT),
        });
    }
    Ok(g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect())
}

/// At least `k` vertices of `keep` attain the maximum degree of the
/// subgraph induced by `keep`.
fn repeats_max(adj: &[u64], keep: u64, k: usize) -> bool {
    let (mut best, mut count) = (0u32, 0usize);
    let mut rest = keep;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & keep).count_ones();
        if d > best {
            best = d;
            count = 1;
        } else if d == best {
            count += 1;
        }
    }
    count >= k
}

/// Size-`d` subsets of `0..n` in lexicographic order, as bitmasks.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, d: usize) -> Self {
        Combinations {
            n,
            idx: (0..d).collect(),
            done: d > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | 1 << i);
        let d = self.idx.len();
        match (0..d).rev().find(|&i| self.idx[i] < self.n - d + i) {
            None => self.done = true,
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..d {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
        }
        Some(mask)
    }
}

fn all_vertices(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn members(mask: u64) -> impl Iterator<Item = Vertex> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// `f_k(G)` by exhaustive search over deletion sets.
pub fn brute_fk(g: &Graph, k: usize, max_n: usize) -> Result<OracleFk> {
    let adj = check_inputs(g, k, max_n)?;
    let n = g.n();
    let all = all_vertices(n);
    for d in 0..=n {
        for deleted in Combinations::new(n, d) {
            let keep = all & !deleted;
            if n - d < k || repeats_max(&adj, keep, k) {
                let certificate = Certificate::evaluate(g, k, members(deleted));
                debug_assert!(certificate.achieves_target());
                return Ok(OracleFk {
                    value: d,
                    certificate,
                });
            }
        }
    }
    unreachable!("deleting every vertex always qualifies")
}

/// Whether some induced subgraph on at least `k` vertices has `k`
/// vertices at its maximum degree. The `|H| < k` escape does not count.
pub fn brute_feasible(g: &Graph, k: usize, max_n: usize) -> Result<Feasibility> {
    let adj = check_inputs(g, k, max_n)?;
    let n = g.n();
    let all = all_vertices(n);
    for d in 0..=n.saturating_sub(k) {
        if n < k {
            break;
        }
        for deleted in Combinations::new(n, d) {
            let keep = all & !deleted;
            if repeats_max(&adj, keep, k) {
                return Ok(Feasibility {
                    feasible: true,
                    witness: Some(members(keep).collect()),
                });
            }
        }
    }
    Ok(Feasibility {
        feasible: false,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::graph::named::*;

    #[test]
    fn combinations_are_lexicographic() {
        let got: Vec<u64> = Combinations::new(4, 2).collect();
        assert_eq!(got, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(Combinations::new(3, 3).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(Combinations::new(10, 4).count(), 210);
    }

    #[test]
    fn star_with_three_target() {
        let r = brute_fk(&star(2), 3, DEFAULT_FK_GUARD).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.certificate.small_h);
    }

    #[test]
    fn copies_of_p3() {
        for k in 3..=5 {
            let g = copies(&star(2), k - 1);
            let r = brute_fk(&g, k, DEFAULT_FK_GUARD).unwrap();
            assert_eq!(r.value, k - 1, "k = {k}");
            assert!(verify_certificate(&g, &r.certificate));
        }
    }

    #[test]
    fn edgeless_and_p4() {
        assert_eq!(brute_fk(&Graph::empty(5), 4, 16).unwrap().value, 0);
        let r = brute_fk(&path(4), 3, 16).unwrap();
        assert_eq!(r.value, 2);
        // lexicographically first minimal set
        assert_eq!(r.certificate.deleted, vec![0, 1]);
    }

    #[test]
    fn feasibility_examples() {
        assert!(!brute_feasible(&path(4), 3, 20).unwrap().feasible);
        let r = brute_feasible(&complete(3), 3, 20).unwrap();
        assert!(r.feasible);
        assert_eq!(r.witness, Some(vec![0, 1, 2]));
        assert!(
            !brute_feasible(&copies(&path(4), 2), 5, 20)
                .unwrap()
                .feasible
        );
        assert!(!brute_feasible(&Graph::empty(1), 2, 20).unwrap().feasible);
    }

    #[test]
    fn guards_and_parameters() {
        let g = path(17);
        assert!(matches!(
            brute_fk(&g, 2, DEFAULT_FK_GUARD),
            Err(Error::GuardExceeded { n: 17, max_n: 16 })
        ));
        assert!(brute_fk(&g, 2, 17).is_ok());
        assert!(matches!(
            brute_fk(&path(3), 1, 16),
            Err(Error::InvalidParameter(_))
        ));
        assert!(brute_feasible(&path(21), 2, DEFAULT_FEASIBLE_GUARD).is_err());
    }
}
