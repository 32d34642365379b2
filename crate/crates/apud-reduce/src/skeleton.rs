use crate::profile::LayoutProfile;
use crate::roles::{EndPart, Frame, PathPos, Role, TipSide};
use crate::ReduceError;
use apud_geometry::{rational::rat_int, LineConfig, Rat};
use apud_graph::Graph;
use num_traits::Zero;

/// Number of clause-line pairs the frame carries. When `n = 2m` the
/// counting argument that pins the frame orientation degenerates, so one
/// extra mirrored clause-line pair is appended; it carries diamonds but
/// never flags.
pub fn clause_pairs(n: usize, m: usize) -> usize {
    if n == 2 * m {
        m + 1
    } else {
        m
    }
}

/// The vertical and horizontal lines for an (n, m) instance: verticals
/// `L = 0`, `x_i = (4 - eps) i`, `R = (4 - eps)(n + 1)`; horizontals the
/// clause lines `+-C_j` mirror-symmetric about the hinge `y = 0` plus the
/// outer pair `+-T`.
pub fn build_lines(
    n: usize,
    m: usize,
    profile: &LayoutProfile,
) -> Result<LineConfig, ReduceError> {
    if n < 1 || m < 1 {
        return Err(ReduceError::Invalid(format!(
            "need n >= 1 and m >= 1, got n = {}, m = {}",
            n, m
        )));
    }
    profile.validate()?;
    let pairs = clause_pairs(n, m);
    let d = profile.column_pitch();
    let verticals: Vec<Rat> = (0..=n as i64 + 1).map(|i| &d * rat_int(i)).collect();
    let mut horizontals = vec![Rat::zero()];
    for j in 1..=pairs {
        let c = profile.clause_line(j);
        horizontals.push(-&c);
        horizontals.push(c);
    }
    let t = profile.top_line(pairs);
    horizontals.push(-&t);
    horizontals.push(t);
    Ok(LineConfig::new(horizontals, verticals)?)
}

/// The formula-independent part of an instance graph, with roles.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub n: usize,
    pub m: usize,
    pub clause_pairs: usize,
    pub profile: LayoutProfile,
}

/// Deterministic vertex numbering, fixed so snapshots stay stable:
/// left frame path bottom-to-top, right frame path, middle-path vertices
/// left-to-right, then each literal column bottom-to-top, diamond tips,
/// end-cycle vertices, and finally (after flag attachment) the flags.
pub struct VertexMap {
    pairs: usize,
    n: usize,
}

impl VertexMap {
    pub fn new(n: usize, pairs: usize) -> Self {
        VertexMap { pairs, n }
    }

    fn frame_len(&self) -> usize {
        4 * self.pairs + 1
    }

    fn column_len(&self) -> usize {
        4 * self.pairs + 3
    }

    /// Frame path vertex at signed position `s` in `-2M..=2M`.
    pub fn frame(&self, frame: Frame, s: i64) -> usize {
        let base = match frame {
            Frame::L => 0,
            Frame::R => self.frame_len(),
        };
        base + (s + 2 * self.pairs as i64) as usize
    }

    /// Middle-path vertex in gap `g` (0..=n).
    pub fn alpha(&self, gap: usize) -> usize {
        2 * self.frame_len() + gap
    }

    /// Literal column `line` (1-based) vertex at signed position `s` in
    /// `-(2M+1)..=(2M+1)`.
    pub fn column(&self, line: usize, s: i64) -> usize {
        2 * self.frame_len()
            + self.n
            + 1
            + (line - 1) * self.column_len()
            + (s + 2 * self.pairs as i64 + 1) as usize
    }

    fn tips_start(&self) -> usize {
        2 * self.frame_len() + self.n + 1 + self.n * self.column_len()
    }

    pub fn tip(&self, frame: Frame, clause: usize, below: bool, side: TipSide) -> usize {
        let frame_off = match frame {
            Frame::L => 0,
            Frame::R => 4 * self.pairs,
        };
        self.tips_start()
            + frame_off
            + (clause - 1) * 4
            + if below { 2 } else { 0 }
            + match side {
                TipSide::Inner => 0,
                TipSide::Outer => 1,
            }
    }

    fn end_cycles_start(&self) -> usize {
        self.tips_start() + 8 * self.pairs
    }

    pub fn end_cycle(&self, line: usize, bottom: bool, part: EndPart) -> usize {
        self.end_cycles_start()
            + (line - 1) * 6
            + if bottom { 0 } else { 3 }
            + match part {
                EndPart::ShoulderLow => 0,
                EndPart::Apex => 1,
                EndPart::ShoulderHigh => 2,
            }
    }

    /// Vertex count before flags.
    pub fn skeleton_len(&self) -> usize {
        self.end_cycles_start() + 6 * self.n
    }
}

fn path_pos(s: i64, frame: bool) -> PathPos {
    if s == 0 {
        return PathPos::Cross;
    }
    let a = s.unsigned_abs() as usize;
    let (clause, far) = if frame {
        // Frame pairs sit at |s| = 2j-1 (near) and 2j (far).
        (a.div_ceil(2), a % 2 == 0)
    } else {
        // Literal pairs sit at |s| = 2j (near) and 2j+1 (far).
        (a / 2, a % 2 == 1)
    };
    PathPos::Straddle {
        clause,
        below: s < 0,
        far,
    }
}

/// Builds the skeleton graph for an (n, m) instance: the two frame paths
/// with a diamond per clause-line crossing, the middle path threading all
/// crossings (one 4-star per literal crossing), and one path per literal
/// ending in induced 4-cycles on both ends.
pub fn build_skeleton(
    n: usize,
    m: usize,
    profile: &LayoutProfile,
) -> Result<Skeleton, ReduceError> {
    if n < 1 || m < 1 {
        return Err(ReduceError::Invalid(format!(
            "need n >= 1 and m >= 1, got n = {}, m = {}",
            n, m
        )));
    }
    profile.validate()?;
    let pairs = clause_pairs(n, m);
    let map = VertexMap::new(n, pairs);
    let mp = pairs as i64;
    let mut roles = vec![None; map.skeleton_len()];

    for frame in [Frame::L, Frame::R] {
        for s in -2 * mp..=2 * mp {
            let role = match frame {
                Frame::L => Role::PL {
                    pos: path_pos(s, true),
                },
                Frame::R => Role::PR {
                    pos: path_pos(s, true),
                },
            };
            roles[map.frame(frame, s)] = Some(role);
        }
    }
    for gap in 0..=n {
        roles[map.alpha(gap)] = Some(Role::PAlpha { gap });
    }
    for line in 1..=n {
        for s in -(2 * mp + 1)..=2 * mp + 1 {
            let role = if s.unsigned_abs() == 1 {
                Role::StarRay {
                    line,
                    below: s < 0,
                }
            } else {
                Role::LiteralPath {
                    line,
                    pos: path_pos(s, false),
                }
            };
            roles[map.column(line, s)] = Some(role);
        }
    }
    for frame in [Frame::L, Frame::R] {
        for clause in 1..=pairs {
            for below in [false, true] {
                for side in [TipSide::Inner, TipSide::Outer] {
                    roles[map.tip(frame, clause, below, side)] = Some(Role::DiamondTip {
                        frame,
                        clause,
                        below,
                        side,
                    });
                }
            }
        }
    }
    for line in 1..=n {
        for bottom in [true, false] {
            for part in [EndPart::ShoulderLow, EndPart::Apex, EndPart::ShoulderHigh] {
                roles[map.end_cycle(line, bottom, part)] =
                    Some(Role::EndCycle { line, bottom, part });
            }
        }
    }
    let roles: Vec<Role> = roles.into_iter().map(Option::unwrap).collect();

    let mut g = Graph::new(map.skeleton_len());
    // Frame paths.
    for frame in [Frame::L, Frame::R] {
        for s in -2 * mp..2 * mp {
            g.add_edge(map.frame(frame, s), map.frame(frame, s + 1))?;
        }
    }
    // Middle path: L crossing, gap 0, x_1 crossing, gap 1, ..., R crossing.
    let mut alpha_path = vec![map.frame(Frame::L, 0)];
    for line in 1..=n {
        alpha_path.push(map.alpha(line - 1));
        alpha_path.push(map.column(line, 0));
    }
    alpha_path.push(map.alpha(n));
    alpha_path.push(map.frame(Frame::R, 0));
    for w in alpha_path.windows(2) {
        g.add_edge(w[0], w[1])?;
    }
    // Literal columns.
    for line in 1..=n {
        for s in -(2 * mp + 1)..2 * mp + 1 {
            g.add_edge(map.column(line, s), map.column(line, s + 1))?;
        }
    }
    // Diamond tips: each adjacent to both disks of its straddle pair.
    for frame in [Frame::L, Frame::R] {
        for clause in 1..=pairs {
            for below in [false, true] {
                let sg = if below { -1 } else { 1 };
                let near = map.frame(frame, sg * (2 * clause as i64 - 1));
                let far = map.frame(frame, sg * 2 * clause as i64);
                for side in [TipSide::Inner, TipSide::Outer] {
                    let tip = map.tip(frame, clause, below, side);
                    g.add_edge(tip, near)?;
                    g.add_edge(tip, far)?;
                }
            }
        }
    }
    // End 4-cycles: path end, low shoulder, apex, high shoulder, back.
    for line in 1..=n {
        for bottom in [true, false] {
            let end = map.column(line, if bottom { -(2 * mp + 1) } else { 2 * mp + 1 });
            let lo = map.end_cycle(line, bottom, EndPart::ShoulderLow);
            let apex = map.end_cycle(line, bottom, EndPart::Apex);
            let hi = map.end_cycle(line, bottom, EndPart::ShoulderHigh);
            g.add_edge(end, lo)?;
            g.add_edge(lo, apex)?;
            g.add_edge(apex, hi)?;
            g.add_edge(hi, end)?;
        }
    }

    Ok(Skeleton {
        graph: g,
        roles,
        n,
        m,
        clause_pairs: pairs,
        profile: profile.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use apud_geometry::rational::{parse_rat, rat, rat_string};
    use apud_graph::{find_induced, PatternKind};

    #[test]
    fn lines_for_the_worked_example() {
        let cfg = build_lines(4, 3, &LayoutProfile::default()).unwrap();
        let verticals: Vec<String> = cfg.verticals().iter().map(rat_string).collect();
        assert_eq!(
            verticals,
            ["0/1", "39/10", "39/5", "117/10", "78/5", "39/2"]
        );
        assert_eq!(
            cfg.verticals().last().unwrap(),
            &parse_rat("195/10").unwrap()
        );
        assert_eq!(cfg.horizontals().len(), 2 * 3 + 3);
    }

    #[test]
    fn horizontals_mirror_about_zero() {
        for (n, m) in [(1, 1), (3, 2), (5, 4), (2, 1)] {
            let cfg = build_lines(n, m, &LayoutProfile::default()).unwrap();
            assert_eq!(cfg.verticals().len(), n + 2);
            let hs = cfg.horizontals();
            for y in hs {
                assert!(hs.contains(&-y), "missing mirror of {}", y);
            }
        }
    }

    #[test]
    fn minimal_config_counts() {
        let cfg = build_lines(1, 1, &LayoutProfile::default()).unwrap();
        assert_eq!(cfg.verticals().len(), 3);
        assert_eq!(cfg.horizontals().len(), 5);
        assert!(build_lines(0, 1, &LayoutProfile::default()).is_err());
        assert!(build_lines(1, 0, &LayoutProfile::default()).is_err());
    }

    #[test]
    fn padding_kicks_in_at_n_equals_2m() {
        assert_eq!(clause_pairs(2, 1), 2);
        assert_eq!(clause_pairs(4, 2), 3);
        assert_eq!(clause_pairs(4, 3), 3);
        let cfg = build_lines(2, 1, &LayoutProfile::default()).unwrap();
        assert_eq!(cfg.horizontals().len(), 2 * 2 + 3);
    }

    #[test]
    fn skeleton_counts_for_worked_example() {
        let sk = build_skeleton(4, 3, &LayoutProfile::default()).unwrap();
        // 2 frame paths of 13, middle path intermediates 5, 4 columns of 15,
        // 24 tips, 24 end-cycle vertices.
        assert_eq!(sk.graph.vertex_count(), 139);
        assert_eq!(sk.roles.len(), 139);
        assert!(sk.graph.is_connected());
    }

    #[test]
    fn diamond_and_star_counts() {
        let profile = LayoutProfile::default();
        for (n, m) in [(1, 1), (3, 2), (4, 3), (2, 1)] {
            let sk = build_skeleton(n, m, &profile).unwrap();
            let pairs = clause_pairs(n, m);
            let diamonds = find_induced(&sk.graph, PatternKind::Diamond).unwrap();
            assert_eq!(diamonds.len(), 4 * pairs, "(n,m)=({},{})", n, m);
            // Split by frame via roles.
            let mut left = 0;
            let mut right = 0;
            for occ in &diamonds {
                match sk.roles[occ.vertices[0]] {
                    Role::PL { .. } | Role::DiamondTip { frame: Frame::L, .. } => left += 1,
                    _ => right += 1,
                }
            }
            assert_eq!(left, 2 * pairs);
            assert_eq!(right, 2 * pairs);

            let stars = find_induced(&sk.graph, PatternKind::Star(4)).unwrap();
            assert_eq!(stars.len(), n);
            for occ in &stars {
                assert!(matches!(
                    sk.roles[occ.vertices[0]],
                    Role::LiteralPath {
                        pos: PathPos::Cross,
                        ..
                    }
                ));
            }
        }
    }

    #[test]
    fn no_long_cycles() {
        let sk = build_skeleton(3, 2, &LayoutProfile::default()).unwrap();
        assert!(apud_graph::longest_cycle_at_most(&sk.graph, 4));
    }

    #[test]
    fn small_epsilon_changes_pitch() {
        let profile = LayoutProfile::with_epsilon(rat(1, 20)).unwrap();
        let cfg = build_lines(1, 1, &profile).unwrap();
        assert_eq!(cfg.verticals()[1], rat(79, 20));
    }
}
