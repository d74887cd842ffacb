use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// Default cap on enumerated independent sets.
pub const DEFAULT_ENUM_CAP: usize = 2_000_000;

/// A family of distinct independent sets of uniform cardinality `r`, tied to
/// one graph.
///
/// Members are kept in ascending bitmask order unless documented otherwise.
#[derive(Clone, Debug)]
pub struct SetFamily {
    graph: Graph,
    r: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    /// Builds a family after checking the invariants: members distinct, of
    /// cardinality `r`, and independent in `graph`.
    pub fn new(graph: Graph, r: usize, members: Vec<VertexSet>) -> Result<Self> {
        for (i, &m) in members.iter().enumerate() {
            if m.len() != r {
                return Err(Error::InvalidArgument(format!(
                    "member {i} has cardinality {} instead of {r}",
                    m.len()
                )));
            }
            if !graph.is_independent(m) {
                return Err(Error::InvalidArgument(format!(
                    "member {i} is not independent"
                )));
            }
            if !m.is_subset_of(graph.vertex_set()) {
                return Err(Error::InvalidArgument(format!(
                    "member {i} uses vertices outside the graph"
                )));
            }
        }
        let mut sorted = members.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != members.len() {
            return Err(Error::InvalidArgument("members are not distinct".into()));
        }
        Ok(SetFamily { graph, r, members })
    }

    pub(crate) fn new_unchecked(graph: Graph, r: usize, members: Vec<VertexSet>) -> Self {
        SetFamily { graph, r, members }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.members.contains(&set)
    }

    /// Members containing `v`, as a new family.
    pub fn filter_containing(&self, v: usize) -> SetFamily {
        SetFamily {
            graph: self.graph.clone(),
            r: self.r,
            members: self
                .members
                .iter()
                .copied()
                .filter(|m| m.contains(v))
                .collect(),
        }
    }

    /// Intersection of all members; the full vertex set when empty.
    pub fn common_intersection(&self) -> VertexSet {
        self.members
            .iter()
            .fold(self.graph.vertex_set(), |acc, &m| acc & m)
    }

    /// True iff every two members share a vertex.
    pub fn is_pairwise_intersecting(&self) -> bool {
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if a.is_disjoint(b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Enumerates all independent sets of cardinality `r`, in ascending bitmask
/// order. Errors with `EnumCapExceeded` if the family would exceed `cap`.
pub fn enumerate_r_sets(g: &Graph, r: usize, cap: usize) -> Result<SetFamily> {
    if r > g.num_vertices() {
        return Err(Error::InvalidArgument(format!(
            "r = {r} exceeds the number of vertices {}",
            g.num_vertices()
        )));
    }
    let mut members = Vec::new();
    extend_sets(g, r, g.vertex_set(), VertexSet::EMPTY, cap, &mut members)?;
    Ok(SetFamily::new_unchecked(g.clone(), r, members))
}

/// The r-star at `v`: all independent r-sets containing `v`, ascending order.
pub fn star_family(g: &Graph, v: usize, r: usize) -> Result<SetFamily> {
    if v >= g.num_vertices() {
        return Err(Error::InvalidVertex {
            vertex: v,
            num_vertices: g.num_vertices(),
        });
    }
    if r == 0 || r > g.num_vertices() {
        return Err(Error::InvalidArgument(format!(
            "star cardinality r = {r} out of range"
        )));
    }
    let allowed = g.vertex_set().difference(g.closed_neighborhood(v));
    let mut members = Vec::new();
    extend_sets(
        g,
        r - 1,
        allowed,
        VertexSet::singleton(v),
        DEFAULT_ENUM_CAP,
        &mut members,
    )?;
    Ok(SetFamily::new_unchecked(g.clone(), r, members))
}

/// Emits `suffix ∪ S` for every independent `need`-subset S of `allowed`,
/// choosing the highest vertex of S last so output is ascending by bitmask.
fn extend_sets(
    g: &Graph,
    need: usize,
    allowed: VertexSet,
    suffix: VertexSet,
    cap: usize,
    out: &mut Vec<VertexSet>,
) -> Result<()> {
    if need == 0 {
        if out.len() >= cap {
            return Err(Error::EnumCapExceeded { cap });
        }
        out.push(suffix);
        return Ok(());
    }
    if allowed.len() < need {
        return Ok(());
    }
    // v runs over possible maxima of the remaining subset, ascending
    for v in allowed.iter() {
        let lower = allowed & VertexSet::below(v);
        let next = lower.difference(g.neighbors(v));
        extend_sets(g, need - 1, next, suffix.with(v), cap, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(family: &SetFamily) -> Vec<Vec<usize>> {
        family.members().iter().map(|m| m.to_vec()).collect()
    }

    #[test]
    fn claw_pairs_are_leaf_pairs() {
        let g = Graph::claw(3).unwrap();
        let fam = enumerate_r_sets(&g, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(sets(&fam), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn r_zero_is_the_empty_set() {
        let g = Graph::path(4).unwrap();
        let fam = enumerate_r_sets(&g, 0, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.members()[0].is_empty());
    }

    #[test]
    fn depth_two_claw_two_sets() {
        // brute-force oracle: all 2-subsets of the 5 vertices, filter independent
        let g = Graph::depth_two_claw(2).unwrap();
        let mut expected = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if !g.has_edge(u, v) {
                    expected.push(VertexSet::from_iter([u, v]));
                }
            }
        }
        expected.sort_unstable();
        let fam = enumerate_r_sets(&g, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(fam.members(), expected.as_slice());
        assert_eq!(fam.len(), 6);
    }

    #[test]
    fn enumeration_is_ascending_by_bitmask() {
        let g = Graph::superclaw(2, 2, 2).unwrap();
        for r in 0..=4 {
            let fam = enumerate_r_sets(&g, r, DEFAULT_ENUM_CAP).unwrap();
            assert!(fam.members().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn star_sizes_on_claws() {
        // K_{1,n}, leaf star has size C(n-1, r-1)
        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 2..7 {
            let g = Graph::claw(n).unwrap();
            for r in 1..=n {
                let fam = star_family(&g, 1, r).unwrap();
                assert_eq!(fam.len(), binom(n - 1, r - 1), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn star_examples() {
        let g = Graph::depth_two_claw(3).unwrap();
        assert_eq!(star_family(&g, 2, 2).unwrap().len(), 5);
        for v in 0..g.num_vertices() {
            let fam = star_family(&g, v, 1).unwrap();
            assert_eq!(sets(&fam), vec![vec![v]]);
        }
    }

    #[test]
    fn star_agrees_with_filtered_enumeration() {
        let g = Graph::elongated_claw(&[1, 2, 3]).unwrap();
        for r in 1..=4 {
            let all = enumerate_r_sets(&g, r, DEFAULT_ENUM_CAP).unwrap();
            for v in 0..g.num_vertices() {
                let star = star_family(&g, v, r).unwrap();
                let filtered: Vec<_> = all
                    .members()
                    .iter()
                    .copied()
                    .filter(|m| m.contains(v))
                    .collect();
                assert_eq!(star.members(), filtered.as_slice());
            }
        }
    }

    #[test]
    fn cap_is_a_typed_error() {
        let g = Graph::new(30).unwrap(); // empty graph, C(30, 5) sets
        let err = enumerate_r_sets(&g, 5, 1000).unwrap_err();
        assert_eq!(err, Error::EnumCapExceeded { cap: 1000 });
    }

    #[test]
    fn family_validation() {
        let g = Graph::claw(3).unwrap();
        let ok = SetFamily::new(
            g.clone(),
            2,
            vec![VertexSet::from_iter([1, 2]), VertexSet::from_iter([2, 3])],
        );
        assert!(ok.is_ok());
        assert!(ok.unwrap().is_pairwise_intersecting());

        let not_indep = SetFamily::new(g.clone(), 2, vec![VertexSet::from_iter([0, 1])]);
        assert!(not_indep.is_err());
        let wrong_card = SetFamily::new(g.clone(), 3, vec![VertexSet::from_iter([1, 2])]);
        assert!(wrong_card.is_err());
        let dup = SetFamily::new(
            g,
            2,
            vec![VertexSet::from_iter([1, 2]), VertexSet::from_iter([1, 2])],
        );
        assert!(dup.is_err());
    }

    #[test]
    fn pairwise_intersecting_examples() {
        let g = Graph::new(5).unwrap();
        let yes = SetFamily::new(
            g.clone(),
            2,
            vec![VertexSet::from_iter([1, 2]), VertexSet::from_iter([2, 3])],
        )
        .unwrap();
        assert!(yes.is_pairwise_intersecting());
        let no = SetFamily::new(
            g,
            1,
            vec![VertexSet::singleton(1), VertexSet::singleton(2)],
        )
        .unwrap();
        assert!(!no.is_pairwise_intersecting());
    }
}
