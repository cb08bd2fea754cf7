use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Length of a shortest cycle. Forests have [`Girth::Infinite`], which
/// compares greater than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// `girth >= bound`; an infinite girth satisfies every bound.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// Finite girth serialises as a number, infinite girth as the string
/// `"infinite"`.
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

pub fn girth(g: &Graph) -> Girth {
    match shortest_cycle(g) {
        Some(c) => Girth::Finite(c.len()),
        None => Girth::Infinite,
    }
}

/// A shortest cycle as a closed vertex sequence (first vertex not repeated),
/// or `None` for forests. BFS from every root; the first candidate of minimum
/// length wins, so the result is deterministic.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = &best {
                // anything found from here on has length >= 2*dist[u]
                if 2 * dist[u] >= b.len() {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().map_or(true, |b| len < b.len()) {
                        let walk = tree_cycle(&parent, root, u, w);
                        // a non-simple closed walk always hides a shorter cycle
                        // that another root will find
                        if is_simple(&walk) {
                            best = Some(walk);
                        }
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 3) {
            break;
        }
    }
    best
}

fn tree_cycle(parent: &[usize], root: usize, u: usize, w: usize) -> Vec<usize> {
    let climb = |mut x: usize| {
        let mut path = vec![x];
        while x != root {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let mut cycle = climb(u);
    cycle.reverse(); // root .. u
    let mut back = climb(w); // w .. root
    back.pop();
    cycle.extend(back);
    cycle
}

fn is_simple(walk: &[usize]) -> bool {
    let mut seen: Vec<usize> = walk.to_vec();
    seen.sort_unstable();
    seen.windows(2).all(|p| p[0] != p[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn small_cases() {
        assert_eq!(girth(&cycle(5)), Girth::Finite(5));
        assert_eq!(girth(&path(3)), Girth::Infinite);
        assert_eq!(girth(&complete(4)), Girth::Finite(3));
        assert_eq!(girth(&cube()), Girth::Finite(4));
        assert_eq!(girth(&petersen()), Girth::Finite(5));
    }

    #[test]
    fn infinite_satisfies_every_bound() {
        assert!(Girth::Infinite.at_least(1000));
        assert!(Girth::Finite(9).at_least(9));
        assert!(!Girth::Finite(8).at_least(9));
        assert!(Girth::Finite(100) < Girth::Infinite);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let g = petersen();
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }
}
