//! Simple undirected graphs on a dense bitset adjacency, plus the
//! constructors the spread searches are built from: complete graphs,
//! disjoint unions, joins, and the apex family `K_1 v (l K_t + m P_1)`.

mod graph6;

pub use graph6::{parse_graph6, write_graph6};

use crate::error::{Error, Result};

/// Simple undirected graph. Immutable once constructed; adjacency is a
/// dense bitset per vertex so `has_edge` is O(1) and neighborhood scans
/// are word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    /// `n * words` u64 words, row v at `v*words..(v+1)*words`.
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0u64; n * words],
        }
    }

    /// Complete graph `K_t`. Rejects `t = 0`.
    pub fn complete(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter(
                "complete graph needs at least one vertex".into(),
            ));
        }
        let mut g = Graph::empty(t);
        for u in 0..t {
            for v in (u + 1)..t {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    /// Graph from an explicit edge list. Self-loops are rejected,
    /// duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `self` come first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    g.set_edge(u, v);
                }
            }
        }
        for u in 0..other.n {
            for v in other.neighbors(u) {
                if v > u {
                    g.set_edge(self.n + u, self.n + v);
                }
            }
        }
        g
    }

    /// Join: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// The family member `G_l = K_1 v (l K_t + (n-1-lt) P_1)`: apex vertex 0,
    /// then `l` blocks of `t` clique vertices, then isolated vertices.
    /// Rejects `l*t > n-1`.
    pub fn extremal(n: usize, t: usize, l: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if t < 2 {
            return Err(Error::InvalidParameter("clique size t must be >= 2".into()));
        }
        let lt = l
            .checked_mul(t)
            .ok_or_else(|| Error::Infeasible("l*t overflows".into()))?;
        if lt > n - 1 {
            return Err(Error::Infeasible(format!(
                "l*t = {lt} exceeds n-1 = {} ({} cliques of size {} do not fit)",
                n - 1,
                l,
                t
            )));
        }
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(0, v);
        }
        for b in 0..l {
            let base = 1 + b * t;
            for i in 0..t {
                for j in (i + 1)..t {
                    g.set_edge(base + i, base + j);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        debug_assert!(total % 2 == 0);
        total / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| {
            std::iter::successors(Some(bits), |&b| Some(b & b.wrapping_sub(1)))
                .take_while(|&b| b != 0)
                .map(move |b| w * 64 + b.trailing_zeros() as usize)
        })
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Dense adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in self.neighbors(u) {
                a[u * n + v] = 1.0;
            }
        }
        a
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, {})", self.n, self.edge_count(), write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_sizes() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);

        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!((0..3).all(|v| k3.degree(v) == 2));

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);

        assert!(Graph::complete(0).is_err());
    }

    #[test]
    fn disjoint_union_counts() {
        let k3 = Graph::complete(3).unwrap();
        let two = k3.disjoint_union(&k3);
        assert_eq!(two.vertex_count(), 6);
        assert_eq!(two.edge_count(), 6);
        assert!(!two.has_edge(0, 3));

        let same = k3.disjoint_union(&Graph::empty(0));
        assert_eq!(same.vertex_count(), 3);
        assert_eq!(same.edge_count(), 3);

        let k2 = Graph::complete(2).unwrap();
        let g = k2.disjoint_union(&Graph::empty(1));
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let k3 = k1.join(&k2);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.vertex_count(), 3);

        // star K_{1,n-1}
        let star = k1.join(&Graph::empty(9));
        assert_eq!(star.edge_count(), 9);
        assert_eq!(star.degree(0), 9);

        // K_1 v 2K_2: 5 vertices, 6 edges, apex degree 4
        let twok2 = k2.disjoint_union(&k2);
        let g = k1.join(&twok2);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn join_edge_count_formula() {
        let g = Graph::extremal(6, 2, 2).unwrap();
        let h = Graph::complete(4).unwrap();
        let j = g.join(&h);
        assert_eq!(
            j.edge_count(),
            g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count()
        );
    }

    #[test]
    fn extremal_family_shape() {
        // apex + 2 triangles: 12 edges (6 apex + 6 clique)
        let g = Graph::extremal(7, 3, 2).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(0), 6);

        // l = 0 is the star
        let star = Graph::extremal(10, 3, 0).unwrap();
        assert_eq!(star.edge_count(), 9);

        // removing the apex leaves l cliques plus isolated vertices
        let g = Graph::extremal(11, 3, 2).unwrap();
        for b in 0..2usize {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        assert!(g.has_edge(1 + 3 * b + i, 1 + 3 * b + j));
                    }
                }
            }
        }
        for v in 7..11 {
            assert_eq!(g.degree(v), 1); // isolated apart from the apex
        }

        assert!(Graph::extremal(7, 3, 3).is_err());
    }

    #[test]
    fn extremal_edge_count_formula() {
        for t in 2..=6usize {
            for l in 0..=4usize {
                let n = 2 + l * t + 3;
                let g = Graph::extremal(n, t, l).unwrap();
                assert_eq!(g.edge_count(), n - 1 + l * t * (t - 1) / 2);
            }
        }
    }

    proptest! {
        #[test]
        fn adjacency_is_symmetric_and_loopless(n in 1usize..30, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            for u in 0..n {
                prop_assert!(!g.has_edge(u, u));
                for v in 0..n {
                    prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
            prop_assert_eq!(g.edge_count(), edges.len());
        }
    }
}
