//! Maximum pairwise-intersecting subfamily search and the r-EKR verdict.
//!
//! The search is an exact maximum-clique branch-and-bound over the
//! compatibility graph whose vertices are the independent r-sets and whose
//! edges join intersecting pairs. Candidates are bitsets over family indices;
//! the bound is greedy colouring in a fixed degeneracy order; the incumbent
//! is seeded with the largest star, which is itself a clique.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{enumerate_r_sets, SetFamily};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Resource limits for enumeration and search.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Cap on the number of enumerated independent sets.
    pub enum_cap: usize,
    /// Practical cap on the family size fed to the clique search.
    pub family_cap: usize,
    /// Cap on branch-and-bound nodes; exhausting it is a typed error,
    /// never a wrong answer.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            enum_cap: crate::family::DEFAULT_ENUM_CAP,
            family_cap: 50_000,
            node_budget: 2_000_000_000,
        }
    }
}

/// Whether every maximum intersecting family is a full star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    Yes,
    No,
    /// I^(r)(G) is empty, so there is nothing to compare.
    Vacuous,
}

/// Everything the r-EKR question needs in one record.
#[derive(Clone, Debug)]
pub struct EkrVerdict {
    pub r: usize,
    pub max_star_size: usize,
    /// Lowest vertex index attaining the maximum star size.
    pub star_center: usize,
    pub max_intersecting_size: usize,
    pub is_r_ekr: bool,
    pub is_strictly_r_ekr: Strictness,
    /// A maximum intersecting family.
    pub witness: SetFamily,
    /// A maximum-size intersecting family with empty common intersection,
    /// when one exists.
    pub nonstar_witness: Option<SetFamily>,
}

/// True iff every two members share a vertex.
pub fn is_pairwise_intersecting(family: &SetFamily) -> bool {
    family.is_pairwise_intersecting()
}

/// Exact maximum pairwise-intersecting subfamily of I^(r)(G).
pub fn max_intersecting(g: &Graph, r: usize, limits: &SearchLimits) -> Result<(usize, SetFamily)> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let family = enumerate_r_sets(g, r, limits.enum_cap)?;
    if family.is_empty() {
        return Ok((0, family));
    }
    if r == 1 {
        // distinct singletons never intersect, so any intersecting family
        // has exactly one member
        let witness = SetFamily::new_unchecked(g.clone(), 1, vec![family.members()[0]]);
        return Ok((1, witness));
    }
    let compat = CompatGraph::build(&family, limits)?;
    let (star_size, star_indices) = best_star(&family, g);
    let mut search = CliqueSearch::new(&compat, &family, limits.node_budget, false);
    let best = search.run(star_size, star_indices)?;
    let members: Vec<VertexSet> = best.iter().map(|&i| family.members()[i]).collect();
    Ok((
        members.len(),
        SetFamily::new_unchecked(g.clone(), r, members),
    ))
}

/// Exact maximum intersecting subfamily whose members have empty common
/// intersection, or `None` when no such family exists.
pub fn max_nonstar_intersecting(
    g: &Graph,
    r: usize,
    limits: &SearchLimits,
) -> Result<Option<(usize, SetFamily)>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let family = enumerate_r_sets(g, r, limits.enum_cap)?;
    if family.is_empty() || r == 1 {
        // a pairwise intersecting family of 1-sets is a single set, which
        // has a common vertex
        return Ok(None);
    }
    let compat = CompatGraph::build(&family, limits)?;
    let mut search = CliqueSearch::new(&compat, &family, limits.node_budget, true);
    let best = search.run(0, Vec::new())?;
    if best.is_empty() {
        return Ok(None);
    }
    let members: Vec<VertexSet> = best.iter().map(|&i| family.members()[i]).collect();
    Ok(Some((
        members.len(),
        SetFamily::new_unchecked(g.clone(), r, members),
    )))
}

/// Assembles the r-EKR verdict for a graph.
///
/// Strictness is decided by the common-vertex characterization: a maximum
/// intersecting family F with common vertex v satisfies F ⊆ I_v^(r) and
/// |F| >= |I_v^(r)| (no star beats a maximum family), hence F is the full
/// star. So G is strictly r-EKR iff it is r-EKR and no maximum family has
/// empty common intersection.
pub fn ekr_verdict(g: &Graph, r: usize, limits: &SearchLimits) -> Result<EkrVerdict> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let family = enumerate_r_sets(g, r, limits.enum_cap)?;
    if family.is_empty() {
        return Ok(EkrVerdict {
            r,
            max_star_size: 0,
            star_center: 0,
            max_intersecting_size: 0,
            is_r_ekr: true,
            is_strictly_r_ekr: Strictness::Vacuous,
            witness: family,
            nonstar_witness: None,
        });
    }

    let mut star_sizes = vec![0usize; g.num_vertices()];
    for m in family.members() {
        for v in m.iter() {
            star_sizes[v] += 1;
        }
    }
    let max_star_size = *star_sizes.iter().max().expect("graph has vertices");
    let star_center = star_sizes
        .iter()
        .position(|&s| s == max_star_size)
        .expect("maximum exists");

    if r == 1 {
        let witness =
            SetFamily::new_unchecked(g.clone(), 1, vec![VertexSet::singleton(star_center)]);
        return Ok(EkrVerdict {
            r,
            max_star_size: 1,
            star_center,
            max_intersecting_size: 1,
            is_r_ekr: true,
            is_strictly_r_ekr: Strictness::Yes,
            witness,
            nonstar_witness: None,
        });
    }

    let (max_intersecting_size, witness) = max_intersecting(g, r, limits)?;
    let nonstar = max_nonstar_intersecting(g, r, limits)?;
    let nonstar_witness = match nonstar {
        Some((size, fam)) if size == max_intersecting_size => Some(fam),
        _ => None,
    };
    let is_r_ekr = max_intersecting_size == max_star_size;
    let is_strictly_r_ekr = if is_r_ekr && nonstar_witness.is_none() {
        Strictness::Yes
    } else {
        Strictness::No
    };
    Ok(EkrVerdict {
        r,
        max_star_size,
        star_center,
        max_intersecting_size,
        is_r_ekr,
        is_strictly_r_ekr,
        witness,
        nonstar_witness,
    })
}

fn best_star(family: &SetFamily, g: &Graph) -> (usize, Vec<usize>) {
    let mut star_sizes = vec![0usize; g.num_vertices()];
    for m in family.members() {
        for v in m.iter() {
            star_sizes[v] += 1;
        }
    }
    let (center, &size) = star_sizes
        .iter()
        .enumerate()
        .max_by_key(|&(v, &s)| (s, std::cmp::Reverse(v)))
        .expect("graph has vertices");
    let indices = family
        .members()
        .iter()
        .enumerate()
        .filter(|(_, m)| m.contains(center))
        .map(|(i, _)| i)
        .collect();
    (size, indices)
}

// ---------------------------------------------------------------------------
// Bitset machinery over family indices
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq)]
struct IndexBitset {
    words: Vec<u64>,
}

impl IndexBitset {
    fn empty(n: usize) -> Self {
        IndexBitset {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = IndexBitset {
            words: vec![u64::MAX; n.div_ceil(64)],
        };
        let spare = s.words.len() * 64 - n;
        if spare > 0 {
            let last = s.words.len() - 1;
            s.words[last] >>= spare;
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and_assign(&mut self, other: &IndexBitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn and(&self, other: &IndexBitset) -> IndexBitset {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    fn intersects(&self, other: &IndexBitset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// |self & !other|
    fn difference_len(&self, other: &IndexBitset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

struct CompatGraph {
    m: usize,
    rows: Vec<IndexBitset>,
}

impl CompatGraph {
    fn build(family: &SetFamily, limits: &SearchLimits) -> Result<CompatGraph> {
        let m = family.len();
        if m > limits.family_cap {
            return Err(Error::FamilyTooLarge {
                size: m,
                limit: limits.family_cap,
            });
        }
        let members = family.members();
        let mut rows = vec![IndexBitset::empty(m); m];
        for i in 0..m {
            for j in i + 1..m {
                if members[i].intersects(members[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Ok(CompatGraph { m, rows })
    }

    /// Degeneracy order: repeatedly remove a minimum-degree vertex.
    fn degeneracy_order(&self) -> Vec<usize> {
        let mut degree: Vec<usize> = self.rows.iter().map(|r| r.len()).collect();
        let mut alive = IndexBitset::full(self.m);
        let mut order = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            let v = alive
                .iter()
                .min_by_key(|&v| degree[v])
                .expect("alive vertices remain");
            order.push(v);
            alive.remove(v);
            for w in self.rows[v].and(&alive).iter() {
                degree[w] -= 1;
            }
        }
        order
    }
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

struct CliqueSearch<'a> {
    compat: &'a CompatGraph,
    sets: &'a [VertexSet],
    universe: VertexSet,
    /// position of each family index in the degeneracy order
    position: Vec<usize>,
    budget: u64,
    nodes: u64,
    nonstar: bool,
    best_size: usize,
    best: Vec<usize>,
}

impl<'a> CliqueSearch<'a> {
    fn new(
        compat: &'a CompatGraph,
        family: &'a SetFamily,
        budget: u64,
        nonstar: bool,
    ) -> CliqueSearch<'a> {
        let order = compat.degeneracy_order();
        let mut position = vec![0usize; compat.m];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        CliqueSearch {
            compat,
            sets: family.members(),
            universe: family.graph().vertex_set(),
            position,
            budget,
            nodes: 0,
            nonstar,
            best_size: 0,
            best: Vec::new(),
        }
    }

    fn run(&mut self, seed_size: usize, seed: Vec<usize>) -> Result<Vec<usize>> {
        self.best_size = seed_size;
        self.best = seed;
        let cand = IndexBitset::full(self.compat.m);
        let mut current = Vec::new();
        self.expand(&mut current, cand, self.universe)?;
        Ok(std::mem::take(&mut self.best))
    }

    fn expand(
        &mut self,
        current: &mut Vec<usize>,
        mut cand: IndexBitset,
        common: VertexSet,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExhausted {
                budget: self.budget,
            });
        }

        // Members that intersect every other candidate can join the clique
        // outright: they extend any completion without shrinking it.
        let mut forced = Vec::new();
        loop {
            // cand \ rows[v] always contains v itself, so a count of 1 means
            // v meets every other candidate
            let batch: Vec<usize> = cand
                .iter()
                .filter(|&v| cand.difference_len(&self.compat.rows[v]) == 1)
                .collect();
            if batch.is_empty() {
                break;
            }
            for &v in &batch {
                cand.remove(v);
                forced.push(v);
            }
        }
        let mut common_here = common;
        for &v in &forced {
            current.push(v);
            common_here = common_here & self.sets[v];
            self.record(current, common_here);
        }

        if self.nonstar && !common_here.is_empty() && !cand.is_empty() {
            // a common vertex contained in every candidate can never be
            // cleared; no completion below this node is a nonstar family
            let mut unavoidable = common_here;
            for v in cand.iter() {
                unavoidable = unavoidable & self.sets[v];
                if unavoidable.is_empty() {
                    break;
                }
            }
            if !unavoidable.is_empty() {
                for _ in 0..forced.len() {
                    current.pop();
                }
                return Ok(());
            }
        }

        if !cand.is_empty() {
            // greedy colouring in degeneracy order; classes hold pairwise
            // non-adjacent members, so any clique takes at most one per class
            let mut members: Vec<usize> = cand.iter().collect();
            members.sort_unstable_by_key(|&v| self.position[v]);
            let mut classes: Vec<IndexBitset> = Vec::new();
            let mut ordered: Vec<(usize, usize)> = Vec::with_capacity(members.len());
            for &v in &members {
                let mut placed = false;
                for (ci, class) in classes.iter_mut().enumerate() {
                    if !class.intersects(&self.compat.rows[v]) {
                        class.insert(v);
                        ordered.push((v, ci + 1));
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    let mut class = IndexBitset::empty(self.compat.m);
                    class.insert(v);
                    classes.push(class);
                    ordered.push((v, classes.len()));
                }
            }
            ordered.sort_unstable_by_key(|&(v, color)| (color, self.position[v]));

            let mut allowed = cand.clone();
            for idx in (0..ordered.len()).rev() {
                let (v, color) = ordered[idx];
                if current.len() + color <= self.best_size {
                    break;
                }
                allowed.remove(v);
                let next_cand = allowed.and(&self.compat.rows[v]);
                current.push(v);
                let next_common = common_here & self.sets[v];
                self.record(current, next_common);
                self.expand(current, next_cand, next_common)?;
                current.pop();
            }
        }

        for _ in 0..forced.len() {
            current.pop();
        }
        Ok(())
    }

    fn record(&mut self, current: &[usize], common: VertexSet) {
        if current.len() > self.best_size && (!self.nonstar || common.is_empty()) {
            self.best_size = current.len();
            self.best = current.to_vec();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn claw_four_pairs() {
        let g = Graph::claw(4).unwrap();
        let (size, fam) = max_intersecting(&g, 2, &limits()).unwrap();
        assert_eq!(size, 3);
        assert!(fam.is_pairwise_intersecting());
        assert_eq!(fam.len(), 3);
    }

    #[test]
    fn depth_two_claw_examples() {
        let g = Graph::depth_two_claw(3).unwrap();
        let (size, fam) = max_intersecting(&g, 2, &limits()).unwrap();
        assert_eq!(size, 5);
        assert!(fam.is_pairwise_intersecting());
        // at r = n the maximum is one more than the largest star
        let (size, fam) = max_intersecting(&g, 3, &limits()).unwrap();
        assert_eq!(size, 7);
        assert!(fam.is_pairwise_intersecting());
    }

    #[test]
    fn depth_two_claw_two_is_two_ekr() {
        // the Remark's construction does not survive n = 2: the true maximum
        // at r = 2 is the star size 3
        let g = Graph::depth_two_claw(2).unwrap();
        let v = ekr_verdict(&g, 2, &limits()).unwrap();
        assert_eq!(v.max_star_size, 3);
        assert_eq!(v.max_intersecting_size, 3);
        assert!(v.is_r_ekr);
        // and a triangle with empty common intersection exists
        assert_eq!(v.is_strictly_r_ekr, Strictness::No);
        assert!(v.nonstar_witness.is_some());
    }

    #[test]
    fn nonstar_on_claws() {
        let g = Graph::claw(4).unwrap();
        let ns = max_nonstar_intersecting(&g, 2, &limits()).unwrap();
        let (size, fam) = ns.unwrap();
        assert_eq!(size, 3);
        assert!(fam.is_pairwise_intersecting());
        assert!(fam.common_intersection().is_empty());

        let g = Graph::claw(5).unwrap();
        let ns = max_nonstar_intersecting(&g, 2, &limits()).unwrap();
        let (size, _) = ns.unwrap();
        assert!(size < 4, "triangle is the best nonstar family: {size}");
    }

    #[test]
    fn nonstar_absent_for_singletons() {
        let g = Graph::path(5).unwrap();
        assert!(max_nonstar_intersecting(&g, 1, &limits()).unwrap().is_none());
    }

    #[test]
    fn verdict_examples() {
        let g = Graph::depth_two_claw(3).unwrap();
        let v = ekr_verdict(&g, 2, &limits()).unwrap();
        assert!(v.is_r_ekr);
        assert_eq!(v.is_strictly_r_ekr, Strictness::Yes);
        assert_eq!(v.max_star_size, 5);

        let v = ekr_verdict(&g, 3, &limits()).unwrap();
        assert!(!v.is_r_ekr);
        assert_eq!(v.max_star_size, 6);
        assert_eq!(v.max_intersecting_size, 7);
        assert_eq!(v.is_strictly_r_ekr, Strictness::No);
    }

    #[test]
    fn meyer_exception_truth() {
        // 2K_2 at r = 2: every maximum family is a full star, so strictness
        // holds even though the theorem is silent here
        let g = Graph::disjoint_complete(2, 2).unwrap();
        let v = ekr_verdict(&g, 2, &limits()).unwrap();
        assert!(v.is_r_ekr);
        assert_eq!(v.is_strictly_r_ekr, Strictness::Yes);
        // 3K_2 at r = 3: the complementary-pair family is a nonstar maximum
        let g = Graph::disjoint_complete(3, 2).unwrap();
        let v = ekr_verdict(&g, 3, &limits()).unwrap();
        assert!(v.is_r_ekr);
        assert_eq!(v.max_intersecting_size, 4);
        assert_eq!(v.is_strictly_r_ekr, Strictness::No);
    }

    #[test]
    fn vacuous_verdict() {
        // complete graph K_4 has no independent 2-sets
        let g = Graph::disjoint_complete(1, 4).unwrap();
        let v = ekr_verdict(&g, 2, &limits()).unwrap();
        assert_eq!(v.is_strictly_r_ekr, Strictness::Vacuous);
        assert!(v.is_r_ekr);
        assert_eq!(v.max_intersecting_size, 0);
    }

    #[test]
    fn r_one_verdict() {
        let g = Graph::path(4).unwrap();
        let v = ekr_verdict(&g, 1, &limits()).unwrap();
        assert_eq!(v.max_star_size, 1);
        assert_eq!(v.max_intersecting_size, 1);
        assert_eq!(v.is_strictly_r_ekr, Strictness::Yes);
        assert!(v.nonstar_witness.is_none());
    }

    #[test]
    fn budget_is_typed() {
        let g = Graph::claw(7).unwrap();
        let tight = SearchLimits {
            node_budget: 1,
            ..SearchLimits::default()
        };
        let err = max_intersecting(&g, 3, &tight).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExhausted { .. }));
    }

    #[test]
    fn family_cap_is_typed() {
        let g = Graph::new(25).unwrap();
        let small = SearchLimits {
            family_cap: 10,
            ..SearchLimits::default()
        };
        let err = max_intersecting(&g, 2, &small).unwrap_err();
        assert!(matches!(err, Error::FamilyTooLarge { .. }));
    }

    #[test]
    fn search_is_invariant_under_relabelling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let base = Graph::elongated_claw(&[2, 1, 3]).unwrap();
        let n = base.num_vertices();
        let (expect, _) = max_intersecting(&base, 2, &limits()).unwrap();
        for _ in 0..6 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let mut relabelled = Graph::new(n).unwrap();
            for (u, v) in base.edges() {
                relabelled.add_edge(perm[u], perm[v]).unwrap();
            }
            let (size, _) = max_intersecting(&relabelled, 2, &limits()).unwrap();
            assert_eq!(size, expect);
        }
    }
}
