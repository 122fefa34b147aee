//! Equating `k` maximum degrees in graphs of maximum degree at most 2
//! with at most `k-1` deletions.
//!
//! Components are sorted into isolated vertices and edges, copies of
//! `K_{1,2}` ("cherries"), and the rest. The degree-2 vertices of the rest
//! induce paths and cycles; deleting a minimum dominating set of them
//! drops the maximum degree to 1, after which a short case analysis on the
//! number of degree-1 vertices and cherries finishes.

use serde::Serialize;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, Vertex};

/// A `K_{1,2}` component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cherry {
    pub center: Vertex,
    /// Ascending.
    pub leaves: [Vertex; 2],
}

#[derive(Clone, Debug)]
pub struct LowDegDecomposition {
    /// Isolated vertices and isolated edges.
    pub small: Vec<Vec<Vertex>>,
    pub cherries: Vec<Cherry>,
    /// Every other component.
    pub other: Vec<Vec<Vertex>>,
    /// Number of vertices of degree 0, 1 and 2.
    pub counts: [usize; 3],
    /// Subgraph induced by the degree-2 vertices of `other`.
    pub core: Induced,
    /// Minimum dominating set of `core`, in input ids.
    pub dominating: Vec<Vertex>,
}

fn check_max_degree(g: &Graph, allowed: usize) -> Result<()> {
    match g.max_degree() {
        Some(found) if found > allowed => Err(Error::MaxDegreeTooLarge { found, allowed }),
        _ => Ok(()),
    }
}

pub fn decompose_deg2(g: &Graph) -> Result<LowDegDecomposition> {
    check_max_degree(g, 2)?;
    let mut small = Vec::new();
    let mut cherries = Vec::new();
    let mut other = Vec::new();
    for comp in g.components() {
        match comp.len() {
            1 | 2 => small.push(comp),
            3 if is_path3(g, &comp) => {
                let center = *comp.iter().find(|&&v| g.degree(v) == 2).unwrap();
                let mut leaves = comp.iter().copied().filter(|&v| v != center);
                let leaves = [leaves.next().unwrap(), leaves.next().unwrap()];
                cherries.push(Cherry { center, leaves });
            }
            _ => other.push(comp),
        }
    }
    let mut counts = [0; 3];
    for v in g.vertices() {
        counts[g.degree(v)] += 1;
    }
    let mut keep = vec![false; g.n()];
    for v in other
        .iter()
        .flatten()
        .copied()
        .filter(|&v| g.degree(v) == 2)
    {
        keep[v] = true;
    }
    let core = g.induced_by_mask(&keep);
    let dominating = min_dominating_paths_cycles(&core.graph)?
        .into_iter()
        .map(|v| core.original[v])
        .collect();
    Ok(LowDegDecomposition {
        small,
        cherries,
        other,
        counts,
        core,
        dominating,
    })
}

/// A 3-vertex component with two edges (the triangle has three).
fn is_path3(g: &Graph, comp: &[Vertex]) -> bool {
    comp.iter().map(|&v| g.degree(v)).sum::<usize>() == 4
}

/// Exact minimum dominating set of a disjoint union of paths and cycles:
/// every third vertex along each component, `⌈ℓ/3⌉` per component.
/// Paths are walked from their smaller endpoint, cycles from their
/// smallest vertex toward its smaller neighbor.
pub fn min_dominating_paths_cycles(f: &Graph) -> Result<Vec<Vertex>> {
    check_max_degree(f, 2)?;
    let mut out = Vec::new();
    for comp in f.components() {
        let len = comp.len();
        let endpoint = comp.iter().copied().find(|&v| f.degree(v) <= 1);
        let start = endpoint.unwrap_or(comp[0]);
        let order = walk(f, start);
        debug_assert_eq!(order.len(), len);
        match endpoint {
            Some(_) => out.extend((0..len.div_ceil(3)).map(|m| order[(1 + 3 * m).min(len - 1)])),
            None => out.extend((0..len.div_ceil(3)).map(|m| order[3 * m])),
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Vertices of a path or cycle component in walk order from `start`,
/// stepping to the smaller unvisited neighbor.
fn walk(f: &Graph, start: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = f.neighbors(cur).iter().find(|&&u| u != prev && u != start) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Which part of the case analysis produced the certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Deg2Branch {
    /// At least `k` vertices already attain the maximum degree, or `n < k`.
    AlreadyEqual,
    /// `Δ <= 1`: one endpoint per isolated edge.
    FlattenEdges,
    /// More than `⌊(k-1)/2⌋` cherries: strip the core, trim every cherry.
    ManyCherries,
    /// No core: trim every cherry, then flatten if still short.
    CherriesOnly,
    /// Core dominated; no cherries.
    CoreOnly,
    /// Core dominated, then every cherry trimmed to an edge.
    CoreThenTrim,
    /// Core dominated, then everything flattened to degree 0.
    CoreThenFlatten,
}

#[derive(Clone, Debug)]
pub struct Deg2Run {
    pub certificate: Certificate,
    pub branch: Deg2Branch,
}

struct Pruner<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deleted: Vec<Vertex>,
}

impl<'g> Pruner<'g> {
    fn new(g: &'g Graph) -> Self {
        Pruner {
            g,
            alive: vec![true; g.n()],
            deleted: Vec::new(),
        }
    }

    fn delete(&mut self, v: Vertex) {
        if self.alive[v] {
            self.alive[v] = false;
            self.deleted.push(v);
        }
    }

    fn degree(&self, v: Vertex) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&u| self.alive[u])
            .count()
    }

    /// Live degree-1 vertices among `scope`.
    fn count_ones(&self, scope: impl Iterator<Item = Vertex>) -> usize {
        scope
            .filter(|&v| self.alive[v] && self.degree(v) == 1)
            .count()
    }

    /// Deletes the smaller endpoint of every live edge inside `scope`.
    /// Only meaningful once the live maximum degree is at most 1.
    fn flatten(&mut self, scope: &[Vertex]) {
        let lower: Vec<Vertex> = scope
            .iter()
            .copied()
            .filter(|&v| self.alive[v])
            .filter(|&v| self.g.neighbors(v).iter().any(|&u| self.alive[u] && u > v))
            .collect();
        for v in lower {
            self.delete(v);
        }
    }

    fn finish(self, k: usize, branch: Deg2Branch) -> Deg2Run {
        Deg2Run {
            certificate: Certificate::evaluate(self.g, k, self.deleted),
            branch,
        }
    }
}

/// Runs the case analysis and reports the branch taken.
pub fn equate_deg2_run(g: &Graph, k: usize) -> Result<Deg2Run> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    check_max_degree(g, 2)?;
    let mut p = Pruner::new(g);
    let all: Vec<Vertex> = g.vertices().collect();
    let delta = g.max_degree().unwrap_or(0);
    let at_max = g.vertices().filter(|&v| g.degree(v) == delta).count();
    if g.n() < k || at_max >= k {
        return Ok(p.finish(k, Deg2Branch::AlreadyEqual));
    }
    if delta <= 1 {
        p.flatten(&all);
        return Ok(p.finish(k, Deg2Branch::FlattenEdges));
    }

    let dec = decompose_deg2(g)?;
    let t = dec.cherries.len();
    if t > (k - 1) / 2 {
        for &v in &dec.core.original {
            p.delete(v);
        }
        for c in &dec.cherries {
            p.delete(c.leaves[0]);
        }
        return Ok(p.finish(k, Deg2Branch::ManyCherries));
    }

    if dec.core.graph.is_empty() {
        for c in &dec.cherries {
            p.delete(c.leaves[0]);
        }
        if p.count_ones(all.iter().copied()) < k {
            p.flatten(&all);
        }
        return Ok(p.finish(k, Deg2Branch::CherriesOnly));
    }

    for &v in &dec.dominating {
        p.delete(v);
    }
    let rest: Vec<Vertex> = dec
        .small
        .iter()
        .chain(&dec.other)
        .flatten()
        .copied()
        .collect();
    let ones = p.count_ones(rest.iter().copied());
    if t == 0 {
        if ones < k {
            p.flatten(&rest);
        }
        return Ok(p.finish(k, Deg2Branch::CoreOnly));
    }
    if ones + 2 * t >= k {
        for c in &dec.cherries {
            p.delete(c.leaves[0]);
        }
        Ok(p.finish(k, Deg2Branch::CoreThenTrim))
    } else {
        p.flatten(&rest);
        for c in &dec.cherries {
            p.delete(c.center);
        }
        Ok(p.finish(k, Deg2Branch::CoreThenFlatten))
    }
}

/// Certificate with at most `k-1` deletions for any graph with `Δ <= 2`.
pub fn equate_deg2(g: &Graph, k: usize) -> Result<Certificate> {
    equate_deg2_run(g, k).map(|r| r.certificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::graph::named::*;

    fn is_dominating(f: &Graph, set: &[Vertex]) -> bool {
        let mut covered = vec![false; f.n()];
        for &v in set {
            covered[v] = true;
            for &u in f.neighbors(v) {
                covered[u] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }

    #[test]
    fn decomposition_examples() {
        let g = union(&[star(2), star(2), complete(2)]);
        let d = decompose_deg2(&g).unwrap();
        assert_eq!(d.cherries.len(), 2);
        assert_eq!(d.small, vec![vec![6, 7]]);
        assert!(d.other.is_empty());
        assert_eq!(
            d.cherries[0],
            Cherry {
                center: 0,
                leaves: [1, 2]
            }
        );

        let d = decompose_deg2(&path(5)).unwrap();
        assert_eq!(d.other.len(), 1);
        assert_eq!(d.core.original, vec![1, 2, 3]);
        assert_eq!(d.core.graph.edge_count(), 2);

        let d = decompose_deg2(&cycle(6)).unwrap();
        assert_eq!(d.core.graph, cycle(6));
        assert_eq!(d.counts, [0, 0, 6]);

        // a triangle is not a cherry
        let d = decompose_deg2(&complete(3)).unwrap();
        assert!(d.cherries.is_empty());
        assert_eq!(d.other.len(), 1);

        assert!(matches!(
            decompose_deg2(&star(3)),
            Err(Error::MaxDegreeTooLarge {
                found: 3,
                allowed: 2
            })
        ));
    }

    #[test]
    fn dominating_sets() {
        assert_eq!(min_dominating_paths_cycles(&path(3)).unwrap(), vec![1]);
        assert_eq!(min_dominating_paths_cycles(&path(4)).unwrap().len(), 2);
        assert_eq!(min_dominating_paths_cycles(&cycle(6)).unwrap().len(), 2);
        assert_eq!(
            min_dominating_paths_cycles(&Graph::empty(2)).unwrap(),
            vec![0, 1]
        );
        for len in 1..=12 {
            let p = path(len);
            let d = min_dominating_paths_cycles(&p).unwrap();
            assert!(is_dominating(&p, &d));
            assert_eq!(d.len(), len.div_ceil(3));
            if len >= 3 {
                let c = cycle(len);
                let d = min_dominating_paths_cycles(&c).unwrap();
                assert!(is_dominating(&c, &d));
                assert_eq!(d.len(), len.div_ceil(3));
            }
        }
        assert!(min_dominating_paths_cycles(&star(3)).is_err());
    }

    #[test]
    fn cherries_need_k_minus_one() {
        let g = copies(&star(2), 3);
        let run = equate_deg2_run(&g, 4).unwrap();
        assert_eq!(run.branch, Deg2Branch::ManyCherries);
        assert_eq!(run.certificate.size(), 3);
        assert!(verify_certificate(&g, &run.certificate));
    }

    #[test]
    fn cycle_needs_nothing() {
        let run = equate_deg2_run(&cycle(5), 3).unwrap();
        assert_eq!(run.branch, Deg2Branch::AlreadyEqual);
        assert!(run.certificate.deleted.is_empty());
    }

    #[test]
    fn p4_with_three() {
        let run = equate_deg2_run(&path(4), 3).unwrap();
        assert_eq!(run.branch, Deg2Branch::CoreOnly);
        assert_eq!(run.certificate.size(), 2);
        assert!(verify_certificate(&path(4), &run.certificate));
    }

    #[test]
    fn degree_one_inputs() {
        let g = union(&[complete(2), complete(2), Graph::empty(3)]);
        let run = equate_deg2_run(&g, 5).unwrap();
        assert_eq!(run.branch, Deg2Branch::FlattenEdges);
        assert_eq!(run.certificate.deleted, vec![0, 2]);
        assert!(verify_certificate(&g, &run.certificate));
    }

    #[test]
    fn rejects_high_degree() {
        assert!(equate_deg2(&star(3), 2).is_err());
        assert!(equate_deg2(&path(3), 1).is_err());
    }
}
