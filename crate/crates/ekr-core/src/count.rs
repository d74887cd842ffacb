use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::DEFAULT_ENUM_CAP;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Exact per-cardinality counts of independent sets.
///
/// `counts[s]` is the number of independent sets of size `s`; the vector has
/// one entry per cardinality from 0 to `num_vertices`. Counts are
/// arbitrary-precision: products like F(a)^{nk} overflow fixed width fast.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountVector {
    counts: Vec<BigUint>,
}

impl CountVector {
    fn from_poly(mut counts: Vec<BigUint>, num_vertices: usize) -> Self {
        counts.resize(num_vertices + 1, BigUint::zero());
        CountVector { counts }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Count at cardinality `s` (zero beyond the stored range).
    pub fn at(&self, s: usize) -> BigUint {
        self.counts.get(s).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Total number of independent sets of all sizes.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Largest cardinality with a nonzero count (the independence number).
    pub fn max_cardinality(&self) -> usize {
        self.counts
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

fn poly_mul(p: &[BigUint], q: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn poly_add(p: &[BigUint], q: &[BigUint]) -> Vec<BigUint> {
    let n = p.len().max(q.len());
    (0..n)
        .map(|i| {
            let a = p.get(i).cloned().unwrap_or_else(BigUint::zero);
            let b = q.get(i).cloned().unwrap_or_else(BigUint::zero);
            a + b
        })
        .collect()
}

/// Exact counts of independent sets by cardinality.
///
/// Forests use the tree DP; anything else falls back to enumeration with the
/// default cap.
pub fn count_by_size(g: &Graph) -> Result<CountVector> {
    if g.is_forest() {
        count_by_size_tree_dp(g)
    } else {
        count_by_size_enumeration(g, DEFAULT_ENUM_CAP)
    }
}

/// Independence-polynomial recursion over rooted components.
///
/// Each component is rooted at its lowest-index vertex; the DP keeps a pair
/// of polynomials (subtree sets containing the vertex / avoiding it) and
/// combines children by convolution.
pub fn count_by_size_tree_dp(g: &Graph) -> Result<CountVector> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut poly = vec![BigUint::one()];
    for comp in g.components() {
        let root = comp.lowest().expect("components are non-empty");
        let (with_root, without_root) = subtree_polys(g, root, usize::MAX);
        poly = poly_mul(&poly, &poly_add(&with_root, &without_root));
    }
    Ok(CountVector::from_poly(poly, g.num_vertices()))
}

fn subtree_polys(g: &Graph, v: usize, parent: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut inp = vec![BigUint::zero(), BigUint::one()];
    let mut outp = vec![BigUint::one()];
    for w in g.neighbors(v).iter() {
        if w == parent {
            continue;
        }
        let (win, wout) = subtree_polys(g, w, v);
        inp = poly_mul(&inp, &wout);
        outp = poly_mul(&outp, &poly_add(&win, &wout));
    }
    (inp, outp)
}

/// Counts independent sets by walking the whole enumeration tree; the cap
/// bounds the number of sets visited. Works on any graph.
pub fn count_by_size_enumeration(g: &Graph, cap: usize) -> Result<CountVector> {
    let mut counts = vec![BigUint::zero(); g.num_vertices() + 1];
    let mut visited = 0usize;
    count_rec(g, g.vertex_set(), 0, cap, &mut visited, &mut counts)?;
    Ok(CountVector { counts })
}

fn count_rec(
    g: &Graph,
    candidates: VertexSet,
    size: usize,
    cap: usize,
    visited: &mut usize,
    counts: &mut [BigUint],
) -> Result<()> {
    *visited += 1;
    if *visited > cap {
        return Err(Error::EnumCapExceeded { cap });
    }
    counts[size] += BigUint::one();
    let mut rest = candidates;
    while let Some(v) = rest.lowest() {
        rest.remove(v);
        count_rec(g, rest.difference(g.neighbors(v)), size + 1, cap, visited, counts)?;
    }
    Ok(())
}

/// Per-cardinality sizes of the star at `v`: counts[r] = |I_v^(r)(G)|.
///
/// Uses the identity |I_v^(r)(G)| = |I^(r-1)(G ↓ v)|, so forests stay on the
/// DP path.
pub fn count_star_by_size(g: &Graph, v: usize) -> Result<CountVector> {
    if v >= g.num_vertices() {
        return Err(Error::InvalidVertex {
            vertex: v,
            num_vertices: g.num_vertices(),
        });
    }
    let (reduced, _) = g.closed_delete(v)?;
    let sub = count_by_size(&reduced)?;
    let mut counts = vec![BigUint::zero()];
    counts.extend(sub.counts.iter().cloned());
    counts.resize(g.num_vertices() + 1, BigUint::zero());
    Ok(CountVector { counts })
}

/// F(a): the number of independent sets of the path on `a` vertices,
/// including the empty set. F(0) = 1, F(1) = 2, Fibonacci recurrence.
pub fn fib_count(a: usize) -> BigUint {
    let mut prev: BigUint = BigUint::one();
    let mut cur: BigUint = 2u32.into();
    if a == 0 {
        return prev;
    }
    for _ in 1..a {
        let next = &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The exact quantities in the root-versus-leaf comparison on T^{n,k,a}:
/// independent-set counts (all sizes) split by membership of the root x and
/// the lowest-numbered leaf y, plus the three-way partition of the sets
/// counted by I'(y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma12Decomposition {
    /// Sets containing the root x.
    pub i_x: BigUint,
    /// Sets containing the leaf y.
    pub i_y: BigUint,
    /// Sets containing both.
    pub i_xy: BigUint,
    /// Sets containing x but not y.
    pub i_prime_x: BigUint,
    /// Sets containing y but not x.
    pub i_prime_y: BigUint,
    /// Of those counted by `i_prime_y`: sets avoiding every claw root.
    pub s1: BigUint,
    /// Sets containing the damaged claw's root c.
    pub s2: BigUint,
    /// Sets avoiding c but meeting one of the other claw roots.
    pub s3: BigUint,
}

/// Computes the decomposition for T^{n,k,a} with x = the root and y = the
/// lowest-numbered leaf (vertex a+1). Requires n >= 2 and a >= 2 so that the
/// leaf's limb keeps a nonempty remnant.
pub fn lemma12_decomposition(n: usize, k: usize, a: usize) -> Result<Lemma12Decomposition> {
    if n < 2 || a < 2 || k < 1 {
        return Err(Error::InvalidArgument(format!(
            "decomposition needs n >= 2, a >= 2, k >= 1 (got n={n}, k={k}, a={a})"
        )));
    }
    let t = Graph::superclaw(n, k, a)?;
    let x = 0usize;
    let y = t
        .leaves()
        .lowest()
        .expect("superclaw has leaves");

    let i_x = star_total(&t, x)?;
    let i_y = star_total(&t, y)?;

    let (t_minus_x, map_x) = t.closed_delete(x)?;
    let y_in = map_x.forward(y).expect("leaf survives closed delete of root");
    let i_xy = star_total(&t_minus_x, y_in)?;

    let i_prime_x = &i_x - &i_xy;
    let i_prime_y = &i_y - &i_xy;

    // T_y = T \ (N(y) ∪ {x, y}); its independent sets are exactly the sets
    // counted by I'(y).
    let keep = t
        .vertex_set()
        .difference(t.closed_neighborhood(y))
        .without(x);
    let (t_y, map_y) = t.induced_subgraph(keep);

    // c = root of the damaged claw (block 0), R = roots of the intact claws
    let block = k * a + 1;
    let c = map_y.forward(1).expect("block-0 root survives");
    let claw_roots: VertexSet = (1..n)
        .map(|i| map_y.forward(1 + i * block).expect("claw roots survive"))
        .collect();

    let s1_keep = t_y.vertex_set().difference(claw_roots).without(c);
    let (s1_graph, _) = t_y.induced_subgraph(s1_keep);
    let s1 = count_by_size(&s1_graph)?.total();

    let (s2_graph, _) = t_y.closed_delete(c)?;
    let s2 = count_by_size(&s2_graph)?.total();

    let (s3_graph, _) = t_y.delete_vertex(c)?;
    let s3 = count_by_size(&s3_graph)?.total() - &s1;

    Ok(Lemma12Decomposition {
        i_x,
        i_y,
        i_xy,
        i_prime_x,
        i_prime_y,
        s1,
        s2,
        s3,
    })
}

fn star_total(g: &Graph, v: usize) -> Result<BigUint> {
    let (reduced, _) = g.closed_delete(v)?;
    Ok(count_by_size(&reduced)?.total())
}

/// I(x) / I(y) on T^{n,k,a} as an exact rational: the count of independent
/// sets through the root over the count through a leaf.
pub fn ratio_root_leaf(n: usize, k: usize, a: usize) -> Result<BigRational> {
    let d = lemma12_decomposition(n, k, a)?;
    Ok(BigRational::new(d.i_x.into(), d.i_y.into()))
}
