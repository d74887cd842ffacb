use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A small simple undirected graph with bitmask adjacency and an optional
/// distinguished root.
///
/// Vertices are `0..num_vertices()` with `num_vertices() <= VertexSet::CAPACITY`.
/// Graphs are immutable once built; every operation on them is a pure function,
/// so they can be shared freely across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    root: Option<usize>,
}

/// Renumbering produced by vertex deletion: surviving vertices are packed
/// downwards, preserving relative order.
#[derive(Clone, Debug)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl VertexMap {
    fn from_kept(kept: &VertexSet, old_n: usize) -> Self {
        let mut old_to_new = vec![None; old_n];
        let mut new_to_old = Vec::with_capacity(kept.len());
        for (new, old) in kept.iter().enumerate() {
            old_to_new[old] = Some(new);
            new_to_old.push(old);
        }
        VertexMap { old_to_new, new_to_old }
    }

    /// New index of an old vertex; `None` if it was deleted.
    pub fn forward(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    /// Old index of a surviving vertex.
    pub fn backward(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Maps a set through the renumbering; `None` if any member was deleted.
    pub fn map_set(&self, set: VertexSet) -> Option<VertexSet> {
        let mut out = VertexSet::EMPTY;
        for v in set.iter() {
            out.insert(self.forward(v)?);
        }
        Some(out)
    }

    /// Maps a set of new indices back to old indices.
    pub fn unmap_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.backward(v)).collect()
    }

    pub fn surviving(&self) -> usize {
        self.new_to_old.len()
    }
}

impl Graph {
    /// An edgeless graph on `num_vertices` vertices.
    pub fn new(num_vertices: usize) -> Result<Self> {
        if num_vertices > VertexSet::CAPACITY {
            return Err(Error::CapacityExceeded {
                requested: num_vertices,
                capacity: VertexSet::CAPACITY,
            });
        }
        Ok(Graph {
            adjacency: vec![VertexSet::EMPTY; num_vertices],
            root: None,
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn set_root(&mut self, v: usize) -> Result<()> {
        self.check_vertex(v)?;
        self.root = Some(v);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.num_vertices() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                num_vertices: self.num_vertices(),
            })
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    /// Neighbours of `v` together with `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adjacency[v].with(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::first_n(self.num_vertices())
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.num_vertices() {
            for v in self.adjacency[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// True iff no two members of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    /// Vertices of degree exactly 1.
    pub fn leaves(&self) -> VertexSet {
        (0..self.num_vertices())
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// BFS distance between two vertices; errors if they are not connected.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut dist = 0usize;
        let mut frontier = VertexSet::singleton(u);
        let mut seen = frontier;
        while !frontier.is_empty() {
            if frontier.contains(v) {
                return Ok(dist);
            }
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next | self.adjacency[w];
            }
            frontier = next.difference(seen);
            seen = seen | frontier;
            dist += 1;
        }
        Err(Error::Disconnected { u, v })
    }

    pub fn is_connected(&self) -> bool {
        if self.num_vertices() == 0 {
            return true;
        }
        self.component_of(0).len() == self.num_vertices()
    }

    fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next | self.adjacency[w];
            }
            frontier = next.difference(seen);
            seen = seen | frontier;
        }
        seen
    }

    /// Connected components, each a vertex set, ordered by lowest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = remaining.lowest() {
            let comp = self.component_of(v);
            out.push(comp);
            remaining = remaining.difference(comp);
        }
        out
    }

    /// True iff the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        let comps = self.components();
        let total_edges = self.edge_count();
        let tree_edges: usize = comps.iter().map(|c| c.len() - 1).sum();
        total_edges == tree_edges
    }

    /// Induced subgraph on `keep`, with the renumbering map.
    ///
    /// The root survives iff it is kept.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, VertexMap) {
        let keep = keep & self.vertex_set();
        let map = VertexMap::from_kept(&keep, self.num_vertices());
        let mut adjacency = Vec::with_capacity(keep.len());
        for old in keep.iter() {
            let kept_nbrs = self.adjacency[old] & keep;
            adjacency.push(map.map_set(kept_nbrs).expect("kept neighbours survive"));
        }
        let root = self.root.and_then(|r| map.forward(r));
        (Graph { adjacency, root }, map)
    }

    /// G - v: deletes `v` and its incident edges, renumbering compactly.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertex_set().without(v)))
    }

    /// G ↓ v: deletes `v` together with all its neighbours.
    pub fn closed_delete(&self, v: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertex_set().difference(self.closed_neighborhood(v))))
    }

    /// μ(G): minimum cardinality of a maximal independent set, by exact
    /// branch-and-bound over "which vertex dominates the first undominated
    /// vertex" decisions.
    ///
    /// A set is a maximal independent set iff it is independent and
    /// dominating, so the search branches on the closed neighbourhood of the
    /// lowest undominated vertex.
    pub fn mu(&self) -> usize {
        assert!(self.num_vertices() >= 1, "mu of the empty graph");
        let mut best = self.num_vertices();
        self.mu_rec(VertexSet::EMPTY, VertexSet::EMPTY, 0, &mut best);
        best
    }

    fn mu_rec(&self, chosen: VertexSet, dominated: VertexSet, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let undominated = self.vertex_set().difference(dominated);
        let Some(u) = undominated.lowest() else {
            *best = size;
            return;
        };
        // some vertex of N[u] must join the set
        for w in self.closed_neighborhood(u).iter() {
            if self.adjacency[w].intersects(chosen) || chosen.contains(w) {
                continue;
            }
            self.mu_rec(
                chosen.with(w),
                dominated | self.closed_neighborhood(w),
                size + 1,
                best,
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical constructors
// ---------------------------------------------------------------------------

impl Graph {
    /// Path P_a on vertices 0..a-1 with consecutive edges. No root.
    pub fn path(a: usize) -> Result<Graph> {
        if a == 0 {
            return Err(Error::EmptyInput("path needs at least one vertex"));
        }
        let mut g = Graph::new(a)?;
        for i in 0..a - 1 {
            g.add_edge(i, i + 1)?;
        }
        Ok(g)
    }

    /// Claw K_{1,n}: centre 0 (the root) adjacent to leaves 1..n.
    pub fn claw(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyInput("claw needs at least one leaf"));
        }
        let mut g = Graph::new(n + 1)?;
        for v in 1..=n {
            g.add_edge(0, v)?;
        }
        g.set_root(0)?;
        Ok(g)
    }

    /// Elongated claw: root 0, one path limb per entry of `limb_lengths`,
    /// limbs numbered consecutively root-outward in input order.
    pub fn elongated_claw(limb_lengths: &[usize]) -> Result<Graph> {
        if limb_lengths.is_empty() {
            return Err(Error::EmptyInput("elongated claw needs at least one limb"));
        }
        if limb_lengths.iter().any(|&len| len == 0) {
            return Err(Error::InvalidArgument(
                "limb lengths must be positive".into(),
            ));
        }
        let total: usize = limb_lengths.iter().sum();
        let mut g = Graph::new(total + 1)?;
        let mut next = 1;
        for &len in limb_lengths {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next)?;
                prev = next;
                next += 1;
            }
        }
        g.set_root(0)?;
        Ok(g)
    }

    /// Depth-two claw with n limbs of two edges each.
    pub fn depth_two_claw(n: usize) -> Result<Graph> {
        Graph::elongated_claw(&vec![2; n])
    }

    /// (k, a)-claw: k limbs each of length a.
    pub fn ka_claw(k: usize, a: usize) -> Result<Graph> {
        Graph::elongated_claw(&vec![a; k])
    }

    /// T^{n,k,a}: n disjoint (k,a)-claws plus a new root 0 adjacent to the
    /// root of each claw. Blocks are numbered consecutively after the root.
    pub fn superclaw(n: usize, k: usize, a: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyInput("superclaw needs at least one block"));
        }
        let blocks: Vec<Graph> = (0..n).map(|_| Graph::ka_claw(k, a)).collect::<Result<_>>()?;
        Graph::join_with_new_root(&blocks)
    }

    /// Disjoint union of n copies of K_t, blocks consecutive. No root.
    pub fn disjoint_complete(n: usize, t: usize) -> Result<Graph> {
        if n == 0 || t == 0 {
            return Err(Error::EmptyInput("disjoint_complete needs n, t >= 1"));
        }
        let mut g = Graph::new(n * t)?;
        for b in 0..n {
            let base = b * t;
            for i in 0..t {
                for j in i + 1..t {
                    g.add_edge(base + i, base + j)?;
                }
            }
        }
        Ok(g)
    }

    /// Joins rooted graphs under a fresh root: vertex 0 is the new root,
    /// adjacent to the (renumbered) root of each input, blocks in input order.
    pub fn join_with_new_root(graphs: &[Graph]) -> Result<Graph> {
        if graphs.is_empty() {
            return Err(Error::EmptyInput("join needs at least one graph"));
        }
        let total: usize = graphs.iter().map(|g| g.num_vertices()).sum();
        let mut g = Graph::new(total + 1)?;
        let mut base = 1;
        for block in graphs {
            let Some(root) = block.root() else {
                return Err(Error::MissingRoot);
            };
            g.add_edge(0, base + root)?;
            for (u, v) in block.edges() {
                g.add_edge(base + u, base + v)?;
            }
            base += block.num_vertices();
        }
        g.set_root(0)?;
        Ok(g)
    }
}

// ---------------------------------------------------------------------------
// Elongated-claw structure
// ---------------------------------------------------------------------------

/// Decomposition of an elongated claw into its limbs.
///
/// `limbs[i]` lists the vertices of limb i from the root outwards (the root
/// itself is not included); the last entry of each limb is its leaf. Limbs
/// are ordered by their first vertex.
#[derive(Clone, Debug)]
pub struct ClawShape {
    pub root: usize,
    pub limbs: Vec<Vec<usize>>,
}

impl ClawShape {
    pub fn leaf_of(&self, limb: usize) -> usize {
        *self.limbs[limb].last().expect("limbs are non-empty")
    }

    /// The limb containing `v`, or `None` when `v` is the root.
    pub fn limb_containing(&self, v: usize) -> Option<usize> {
        self.limbs.iter().position(|limb| limb.contains(&v))
    }

    /// Leaves of all limbs (excludes the root even when it has degree 1).
    pub fn limb_leaves(&self) -> VertexSet {
        self.limbs.iter().map(|limb| *limb.last().unwrap()).collect()
    }

    /// Indices of limbs with exactly one edge.
    pub fn short_limbs(&self) -> Vec<usize> {
        (0..self.limbs.len())
            .filter(|&i| self.limbs[i].len() == 1)
            .collect()
    }

    pub fn limb_lengths(&self) -> Vec<usize> {
        self.limbs.iter().map(|limb| limb.len()).collect()
    }
}

/// Validates that `g` is an elongated claw (a rooted tree where every
/// non-root vertex has degree at most 2) and returns its limb decomposition.
pub fn claw_shape(g: &Graph) -> Result<ClawShape> {
    let Some(root) = g.root() else {
        return Err(Error::NotElongatedClaw("no root designated"));
    };
    if !g.is_connected() {
        return Err(Error::NotElongatedClaw("not connected"));
    }
    if g.edge_count() != g.num_vertices() - 1 {
        return Err(Error::NotElongatedClaw("not a tree"));
    }
    for v in 0..g.num_vertices() {
        if v != root && g.degree(v) > 2 {
            return Err(Error::NotElongatedClaw("non-root vertex of degree > 2"));
        }
    }
    let mut limbs = Vec::new();
    for start in g.neighbors(root).iter() {
        let mut limb = vec![start];
        let (mut prev, mut cur) = (root, start);
        loop {
            let next = g.neighbors(cur).without(prev);
            match next.lowest() {
                None => break,
                Some(w) => {
                    limb.push(w);
                    prev = cur;
                    cur = w;
                }
            }
        }
        limbs.push(limb);
    }
    Ok(ClawShape { root, limbs })
}
