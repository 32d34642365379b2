use crate::formula::NaeFormula;
use crate::profile::LayoutProfile;
use crate::roles::Role;
use crate::skeleton::{build_lines, build_skeleton, Skeleton, VertexMap};
use crate::ReduceError;
use apud_geometry::LineConfig;
use apud_graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceParams {
    pub n: usize,
    pub m: usize,
    /// Clause-line pairs actually built; `m + 1` when the `n = 2m` padding
    /// pair was appended.
    pub clause_pairs: usize,
    pub profile: LayoutProfile,
    /// Present for formula-built instances, absent for bare skeletons.
    pub formula: Option<NaeFormula>,
}

/// A compiled instance: the graph to be realized, the line configuration
/// to realize it on, and per-vertex roles tying the two together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub lines: LineConfig,
    pub roles: Vec<Role>,
    pub params: InstanceParams,
}

impl ReductionInstance {
    pub fn vertex_map(&self) -> VertexMap {
        VertexMap::new(self.params.n, self.params.clause_pairs)
    }

    pub fn flag_count(&self) -> usize {
        self.roles.iter().filter(|r| r.is_flag()).count()
    }
}

/// Attaches the clause/literal flags to a skeleton: one triangle flag per
/// bottom crossing of a literal line with a mirrored clause line, and one
/// per top crossing whose variable does not appear in the clause. Each flag
/// is adjacent to exactly the two consecutive literal-path vertices
/// straddling the clause line, so a missing top flag at (line, clause)
/// encodes that the variable occurs in the clause.
pub fn attach_flags(
    skeleton: Skeleton,
    formula: &NaeFormula,
) -> Result<ReductionInstance, ReduceError> {
    if formula.variable_count() != skeleton.n || formula.clause_count() != skeleton.m {
        return Err(ReduceError::DimensionMismatch(format!(
            "formula is ({} vars, {} clauses) but skeleton was built for ({}, {})",
            formula.variable_count(),
            formula.clause_count(),
            skeleton.n,
            skeleton.m
        )));
    }
    let Skeleton {
        graph,
        mut roles,
        n,
        m,
        clause_pairs,
        profile,
    } = skeleton;
    let map = VertexMap::new(n, clause_pairs);

    let mut flag_specs: Vec<Role> = Vec::new();
    for clause in 1..=m {
        for line in 1..=n {
            flag_specs.push(Role::Flag {
                line,
                clause,
                top: false,
            });
        }
    }
    for clause in 1..=m {
        for line in 1..=n {
            if !formula.contains(line - 1, clause - 1) {
                flag_specs.push(Role::Flag {
                    line,
                    clause,
                    top: true,
                });
            }
        }
    }

    let base = graph.vertex_count();
    let mut g = Graph::new(base + flag_specs.len());
    for (u, v) in graph.edges() {
        g.add_edge(u, v)?;
    }
    for (k, role) in flag_specs.iter().enumerate() {
        let Role::Flag { line, clause, top } = *role else {
            unreachable!()
        };
        let sg = if top { 1i64 } else { -1 };
        let near = map.column(line, sg * 2 * clause as i64);
        let far = map.column(line, sg * (2 * clause as i64 + 1));
        g.add_edge(base + k, near)?;
        g.add_edge(base + k, far)?;
        roles.push(*role);
    }

    let lines = build_lines(n, m, &profile)?;
    Ok(ReductionInstance {
        graph: g,
        lines,
        roles,
        params: InstanceParams {
            n,
            m,
            clause_pairs,
            profile,
            formula: Some(formula.clone()),
        },
    })
}

/// The full compiler: frame lines, skeleton, flags.
pub fn reduce(
    formula: &NaeFormula,
    profile: &LayoutProfile,
) -> Result<ReductionInstance, ReduceError> {
    if formula.clause_count() < 1 {
        return Err(ReduceError::Invalid(
            "reduction needs at least one clause".into(),
        ));
    }
    let skeleton = build_skeleton(formula.variable_count(), formula.clause_count(), profile)?;
    attach_flags(skeleton, formula)
}

/// The flag-free instance for bare (n, m): everything the construction
/// forces regardless of the formula. This is also the smallest end-to-end
/// case (n = 1, m = 1), which no 3-literal formula can reach.
pub fn reduce_skeleton(
    n: usize,
    m: usize,
    profile: &LayoutProfile,
) -> Result<ReductionInstance, ReduceError> {
    let skeleton = build_skeleton(n, m, profile)?;
    let lines = build_lines(n, m, profile)?;
    Ok(ReductionInstance {
        graph: skeleton.graph,
        lines,
        roles: skeleton.roles,
        params: InstanceParams {
            n,
            m,
            clause_pairs: skeleton.clause_pairs,
            profile: skeleton.profile,
            formula: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use apud_graph::longest_cycle_at_most;

    fn worked_instance() -> ReductionInstance {
        reduce(&NaeFormula::worked_example(), &LayoutProfile::default()).unwrap()
    }

    #[test]
    fn worked_example_flag_counts() {
        let inst = worked_instance();
        let bottom = inst
            .roles
            .iter()
            .filter(|r| matches!(r, Role::Flag { top: false, .. }))
            .count();
        let top = inst
            .roles
            .iter()
            .filter(|r| matches!(r, Role::Flag { top: true, .. }))
            .count();
        assert_eq!(bottom, 4 * 3);
        assert_eq!(top, 4 * 3 - 3 * 3);
    }

    #[test]
    fn top_flags_mark_absent_variables() {
        let f = NaeFormula::worked_example();
        let inst = worked_instance();
        for clause in 1..=3usize {
            for line in 1..=4usize {
                let has_flag = inst.roles.iter().any(
                    |r| matches!(r, Role::Flag { line: l, clause: c, top: true } if *l == line && *c == clause),
                );
                assert_eq!(has_flag, !f.contains(line - 1, clause - 1));
            }
        }
    }

    #[test]
    fn single_clause_flag_counts() {
        let f = NaeFormula::parse("p nae 3 1\n1 2 3\n").unwrap();
        let inst = reduce(&f, &LayoutProfile::default()).unwrap();
        let bottom = inst
            .roles
            .iter()
            .filter(|r| matches!(r, Role::Flag { top: false, .. }))
            .count();
        let top = inst
            .roles
            .iter()
            .filter(|r| matches!(r, Role::Flag { top: true, .. }))
            .count();
        assert_eq!(bottom, 3);
        assert_eq!(top, 0);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let f = NaeFormula::worked_example();
        let skeleton = build_skeleton(3, 3, &LayoutProfile::default()).unwrap();
        assert!(matches!(
            attach_flags(skeleton, &f),
            Err(ReduceError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn instance_cycles_are_short() {
        let inst = worked_instance();
        assert!(longest_cycle_at_most(&inst.graph, 4));
        assert!(!longest_cycle_at_most(&inst.graph, 3));
    }

    #[test]
    fn flags_form_triangles() {
        let inst = worked_instance();
        for (v, role) in inst.roles.iter().enumerate() {
            if role.is_flag() {
                let nb: Vec<usize> = inst.graph.neighbors(v).collect();
                assert_eq!(nb.len(), 2);
                assert!(inst.graph.adjacent(nb[0], nb[1]));
            }
        }
    }

    #[test]
    fn skeleton_only_instance() {
        let inst = reduce_skeleton(1, 1, &LayoutProfile::default()).unwrap();
        assert_eq!(inst.flag_count(), 0);
        assert!(inst.params.formula.is_none());
        assert!(inst.graph.is_connected());
        assert!(longest_cycle_at_most(&inst.graph, 4));
    }

    #[test]
    fn reduction_is_deterministic() {
        let a = serde_json::to_vec(&worked_instance()).unwrap();
        let b = serde_json::to_vec(&worked_instance()).unwrap();
        assert_eq!(a, b);
    }
}
