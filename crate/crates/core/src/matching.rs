//! Maximum-cardinality bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

const UNMATCHED: usize = usize::MAX;

/// Bipartite graph with `left` and `right` vertex counts and adjacency
/// lists from left vertices to right vertices.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    adjacency: Vec<Vec<usize>>,
    right: usize,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            adjacency: vec![Vec::new(); left],
            right,
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(r < self.right, "right vertex {r} out of range");
        self.adjacency[l].push(r);
    }

    pub fn left_len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn right_len(&self) -> usize {
        self.right
    }

    /// Size of a maximum matching.
    pub fn maximum_matching(&self) -> usize {
        self.maximum_matching_pairs().len()
    }

    /// A maximum matching as `(left, right)` pairs, sorted by left vertex.
    pub fn maximum_matching_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.adjacency.len();
        let mut match_left = vec![UNMATCHED; n];
        let mut match_right = vec![UNMATCHED; self.right];
        let mut dist = vec![0usize; n];

        while self.bfs(&match_left, &match_right, &mut dist) {
            for u in 0..n {
                if match_left[u] == UNMATCHED {
                    self.dfs(u, &mut match_left, &mut match_right, &mut dist);
                }
            }
        }

        match_left
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != UNMATCHED)
            .map(|(l, &r)| (l, r))
            .collect()
    }

    // Layers free left vertices at distance 0; returns whether some free
    // right vertex is reachable by an alternating path.
    fn bfs(&self, match_left: &[usize], match_right: &[usize], dist: &mut [usize]) -> bool {
        let mut queue = VecDeque::new();
        for (u, d) in dist.iter_mut().enumerate() {
            if match_left[u] == UNMATCHED {
                *d = 0;
                queue.push_back(u);
            } else {
                *d = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                let w = match_right[v];
                if w == UNMATCHED {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        found
    }

    fn dfs(
        &self,
        u: usize,
        match_left: &mut [usize],
        match_right: &mut [usize],
        dist: &mut [usize],
    ) -> bool {
        for &v in &self.adjacency[u] {
            let w = match_right[v];
            let advance = w == UNMATCHED
                || (dist[w] == dist[u] + 1 && self.dfs(w, match_left, match_right, dist));
            if advance {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }
}
