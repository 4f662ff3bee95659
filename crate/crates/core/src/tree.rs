//! Undirected trees on `{1, ..., w}`.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::TreeError;
use crate::set::ElemSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(w: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if w == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != w - 1 {
            return Err(TreeError::EdgeCount { expected: w - 1, found: edges.len() });
        }
        let mut adjacency = alloc::vec![Vec::new(); w];
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > w {
                    return Err(TreeError::OutOfRange { vertex: x, w });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            if adjacency[u - 1].contains(&v) {
                return Err(TreeError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let tree = Tree { adjacency };
        if tree.component(1, &ElemSet::new()).len() != w {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_edges(n, &edges).expect("path is a tree")
    }

    pub fn w(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (1..=self.w())
            .flat_map(|u| self.adjacency[u - 1].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// BFS parent pointers from `root` (`parent[root - 1] == 0`), plus the visit order.
    pub fn rooted(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent = alloc::vec![0; self.w()];
        let mut order = Vec::with_capacity(self.w());
        let mut seen = alloc::vec![false; self.w()];
        let mut queue = VecDeque::from([root]);
        seen[root - 1] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.adjacency[u - 1] {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    parent[v - 1] = u;
                    queue.push_back(v);
                }
            }
        }
        (parent, order)
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn component(&self, start: usize, blocked: &ElemSet) -> ElemSet {
        let mut seen = ElemSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u - 1] {
                if !blocked.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    pub fn is_connected_subset(&self, set: &ElemSet) -> bool {
        match set.first() {
            None => true,
            Some(s) => {
                let outside = ElemSet::full(self.w()).difference(set);
                self.component(s, &outside) == *set
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(Tree::from_edges(0, &[]), Err(TreeError::Empty));
        assert!(Tree::from_edges(1, &[]).is_ok());
        assert_eq!(Tree::from_edges(3, &[(1, 2)]), Err(TreeError::EdgeCount { expected: 2, found: 1 }));
        assert_eq!(Tree::from_edges(3, &[(1, 2), (2, 1)]), Err(TreeError::DuplicateEdge(1, 2)));
        assert_eq!(Tree::from_edges(4, &[(1, 2), (2, 1), (3, 4)]), Err(TreeError::DuplicateEdge(1, 2)));
        assert_eq!(Tree::from_edges(4, &[(1, 2), (3, 4), (4, 3)]), Err(TreeError::DuplicateEdge(3, 4)));
        assert_eq!(Tree::from_edges(2, &[(2, 2)]), Err(TreeError::SelfLoop(2)));
    }

    #[test]
    fn disconnected_rejected() {
        // 4 vertices, 3 edges, but a cycle 1-2-3 leaves 4 isolated.
        assert_eq!(Tree::from_edges(4, &[(1, 2), (2, 3), (3, 1)]), Err(TreeError::Disconnected));
    }

    #[test]
    fn connectivity() {
        let t = Tree::path(4);
        assert!(t.is_connected_subset(&ElemSet::from([2, 3])));
        assert!(!t.is_connected_subset(&ElemSet::from([1, 3])));
        assert!(t.is_connected_subset(&ElemSet::new()));
        assert_eq!(t.edges(), alloc::vec![(1, 2), (2, 3), (3, 4)]);
    }
}
