//! Finite quivers, doubles, sink reflections and admissibility.

use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// An arrow of a graded quiver. `degree` is the internal grading degree the
/// arrow carries in the path algebra (path length is tracked separately).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
    #[serde(default)]
    pub degree: i64,
}

/// A finite quiver on vertices `0..vertices` (input documents use 1-based
/// labels; conversion happens at the parsing boundary).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let q = Quiver { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let mut names = BTreeSet::new();
        for a in &self.arrows {
            if a.from >= self.vertices || a.to >= self.vertices {
                return Err(Error::BadInput(format!(
                    "arrow {} references vertex outside 0..{}",
                    a.name, self.vertices
                )));
            }
            if a.name.is_empty() {
                return Err(Error::BadInput("arrow with empty name".into()));
            }
            if !names.insert(a.name.clone()) {
                return Err(Error::BadInput(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(())
    }

    pub fn arrow(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.from == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.to == v)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Vertices in a topological order of the arrows, if acyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut queue: VecDeque<usize> =
            (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in self.arrows_from(v) {
                indeg[a.to] -= 1;
                if indeg[a.to] == 0 {
                    queue.push_back(a.to);
                }
            }
        }
        (order.len() == self.vertices).then_some(order)
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.from == a.to)
    }

    /// Number of edges between `u` and `v` in the underlying graph.
    pub fn edge_multiplicity(&self, u: usize, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.from == u && a.to == v) || (a.from == v && a.to == u))
            .count()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows_from(v).next().is_none() && self.arrows_to(v).next().is_some()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows_to(v).next().is_none() && self.arrows_from(v).next().is_some()
    }

    /// The double quiver: every arrow `a` keeps degree 0 and gains a reverse
    /// companion `a*` of degree 1.
    pub fn double(&self) -> Quiver {
        let mut arrows = Vec::with_capacity(self.arrows.len() * 2);
        for a in &self.arrows {
            arrows.push(Arrow { name: a.name.clone(), from: a.from, to: a.to, degree: 0 });
        }
        for a in &self.arrows {
            arrows.push(Arrow {
                name: format!("{}*", a.name),
                from: a.to,
                to: a.from,
                degree: 1,
            });
        }
        Quiver { vertices: self.vertices, arrows }
    }

    /// Sink reflection: reverse all arrows ending at the sink `v`.
    pub fn sink_reflection(&self, v: usize) -> Result<Quiver> {
        if !self.is_sink(v) {
            return Err(Error::BadInput(format!("vertex {} is not a sink", v + 1)));
        }
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.to == v {
                    Arrow { name: a.name.clone(), from: a.to, to: a.from, degree: a.degree }
                } else {
                    a.clone()
                }
            })
            .collect();
        Ok(Quiver { vertices: self.vertices, arrows })
    }

    /// Does `word` (vertex indices) contain, as a subsequence, an ordering of
    /// all vertices in which every arrow's source appears before its target?
    /// Such a subsequence is found greedily against a topological constraint
    /// search; the quiver must be acyclic for one to exist.
    pub fn admissible_subsequence(&self, word: &[usize]) -> Option<Vec<usize>> {
        if !self.is_acyclic() {
            return None;
        }
        // Greedy scan: walk the word, pick a vertex when all its in-neighbors
        // were already picked and it was not picked yet. Greedy is complete
        // here: picking earlier never hurts later choices.
        let mut picked = vec![false; self.vertices];
        let mut need = vec![0usize; self.vertices];
        for a in &self.arrows {
            if a.from != a.to {
                need[a.to] += 1;
            }
        }
        let mut satisfied = vec![0usize; self.vertices];
        let mut seq = Vec::new();
        for (pos, &v) in word.iter().enumerate() {
            if v < self.vertices && !picked[v] && satisfied[v] == need[v] {
                picked[v] = true;
                seq.push(pos);
                for a in self.arrows_from(v) {
                    if a.to != v {
                        satisfied[a.to] += 1;
                    }
                }
            }
        }
        (seq.len() == self.vertices).then_some(seq)
    }

    /// Restrict to the induced subquiver on `keep` (re-indexing vertices in
    /// the order given). Arrows touching dropped vertices are discarded.
    pub fn restrict(&self, keep: &[usize]) -> Quiver {
        let map: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(Arrow {
                    name: a.name.clone(),
                    from: *map.get(&a.from)?,
                    to: *map.get(&a.to)?,
                    degree: a.degree,
                })
            })
            .collect();
        Quiver { vertices: keep.len(), arrows }
    }

    /// All orientations reachable from `self` by sink reflections, paired with
    /// the reflection sequence that reaches them. Breadth-first, deterministic.
    pub fn sink_reflection_orbit(&self, max_nodes: usize) -> Vec<(Quiver, Vec<usize>)> {
        let mut seen: Vec<Quiver> = vec![self.clone()];
        let mut out = vec![(self.clone(), Vec::new())];
        let mut queue: VecDeque<usize> = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            let (q, path) = out[idx].clone();
            for v in 0..q.vertices {
                if q.is_sink(v) {
                    let r = q.sink_reflection(v).expect("checked sink");
                    if !seen.contains(&r) {
                        if seen.len() >= max_nodes {
                            continue;
                        }
                        seen.push(r.clone());
                        let mut p = path.clone();
                        p.push(v);
                        out.push((r, p));
                        queue.push_back(out.len() - 1);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, from: usize, to: usize) -> Arrow {
        Arrow { name: name.into(), from, to, degree: 0 }
    }

    /// 1 -> 2, 1 -> 3, 2 -> 3 (0-indexed).
    fn triangle() -> Quiver {
        Quiver::new(3, vec![arrow("a", 0, 1), arrow("c", 0, 2), arrow("b", 1, 2)]).unwrap()
    }

    #[test]
    fn triangle_shape() {
        let q = triangle();
        assert!(q.is_acyclic());
        assert!(q.is_sink(2));
        assert!(!q.is_sink(1));
        assert!(q.is_source(0));
    }

    #[test]
    fn double_degrees() {
        let d = triangle().double();
        assert_eq!(d.arrows.len(), 6);
        assert_eq!(d.arrow("a*").unwrap().degree, 1);
        assert_eq!(d.arrow("a*").unwrap().from, 1);
        assert_eq!(d.arrow("a").unwrap().degree, 0);
    }

    #[test]
    fn sink_reflection_moves_sink() {
        let q = triangle();
        let r = q.sink_reflection(2).unwrap();
        // arrows into 3 get reversed; vertex 3 becomes a source
        assert!(r.is_source(2));
        assert!(q.sink_reflection(0).is_err());
    }

    #[test]
    fn admissible_subsequence_triangle() {
        let q = triangle();
        // word s2 s3 s1 s3 s2 s1 (0-indexed: 1 2 0 2 1 0) has no admissible
        // subsequence for the triangle orientation: 0 must come first but the
        // prefix before the first usable 0 contains the only chance to order
        // 1 before 2... check against the direct search.
        assert!(q.admissible_subsequence(&[1, 2, 0, 2, 1, 0]).is_none());
        // but the reflected quiver at vertex 3 admits (2,0,1) inside it
        let r = q.sink_reflection(2).unwrap();
        let seq = r.admissible_subsequence(&[1, 2, 0, 2, 1, 0]).unwrap();
        assert_eq!(seq.len(), 3);
    }

    #[test]
    fn orbit_of_a2() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1)]).unwrap();
        let orbit = q.sink_reflection_orbit(16);
        assert_eq!(orbit.len(), 2);
        assert_eq!(orbit[1].1, vec![1]);
    }
}
