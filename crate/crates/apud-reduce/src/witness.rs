use crate::formula::Assignment;
use crate::instance::ReductionInstance;
use crate::roles::{EndPart, Frame, PathPos, Role, TipSide};
use crate::ReduceError;
use apud_geometry::{rational::rat_int, LineRef, Placement, Point, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Builds the explicit realization encoded by a NAE-satisfying assignment.
///
/// Skeleton disks follow the fixed layout; each literal column is mirrored
/// about the hinge when its variable is false, which moves that column's
/// flags between the upper and lower clause lines. Flags are then packed
/// into the gaps between literal lines, preferring the right side. The
/// result places every vertex on its assigned line and realizes the
/// instance graph exactly.
pub fn witness_embedding(
    inst: &ReductionInstance,
    assignment: &Assignment,
) -> Result<Placement, ReduceError> {
    let n = inst.params.n;
    let pairs = inst.params.clause_pairs;
    let profile = &inst.params.profile;
    if assignment.values.len() != n {
        return Err(ReduceError::DimensionMismatch(format!(
            "assignment has {} values, instance has {} literals",
            assignment.values.len(),
            n
        )));
    }
    if let Some(f) = &inst.params.formula {
        if let Some(clause) = assignment.violating_clause(f) {
            return Err(ReduceError::NotNaeSatisfying { clause });
        }
    }
    profile.feasible_for(n)?;

    let d = profile.column_pitch();
    let g = &profile.straddle_gap;
    let h = &profile.frame_gap;
    let ys = &profile.spacer_gap;
    let tip = &profile.tip_offset;
    let flag_off = &profile.flag_offset;
    let pitch = &profile.shoulder_pitch;
    let top = profile.top_line(pairs);
    let apex_y = &top + &profile.apex_rise;
    let shoulder_start = profile.shoulder_start(n);
    let right_frame = &d * rat_int(n as i64 + 1);
    let clause_y: Vec<Rat> = (1..=pairs).map(|j| profile.clause_line(j)).collect();

    let col_x = |i: usize| &d * rat_int(i as i64);
    let flipped = |line: usize| !assignment.values[line - 1];
    let orient = |line: usize, y: Rat| if flipped(line) { -y } else { y };

    let straddle_y = |clause: usize, below: bool, far: bool, gap: &Rat| -> Rat {
        let base = &clause_y[clause - 1] + if far { gap.clone() } else { -gap.clone() };
        if below {
            -base
        } else {
            base
        }
    };

    let h_line = |lines: &apud_geometry::LineConfig, y: &Rat| -> Result<LineRef, ReduceError> {
        lines
            .find_h(y)
            .map(LineRef::h)
            .ok_or_else(|| ReduceError::Invalid(format!("no horizontal line at {}", y)))
    };
    let v_line = |lines: &apud_geometry::LineConfig, x: &Rat| -> Result<LineRef, ReduceError> {
        lines
            .find_v(x)
            .map(LineRef::v)
            .ok_or_else(|| ReduceError::Invalid(format!("no vertical line at {}", x)))
    };

    let lines = &inst.lines;
    let alpha = h_line(lines, &Rat::zero())?;
    let mut placement = Placement::new();

    // Flags are positioned per clause line, after grouping; everything else
    // is a direct function of the role.
    let mut flags_by_line: BTreeMap<(usize, bool), Vec<(usize, usize)>> = BTreeMap::new();

    for (v, role) in inst.roles.iter().enumerate() {
        match *role {
            Role::PAlpha { gap } => {
                let x = col_x(gap) + &d / rat_int(2);
                placement.place(v, Point::new(x, Rat::zero()), alpha);
            }
            Role::PL { pos } | Role::PR { pos } => {
                let x = if matches!(role, Role::PL { .. }) {
                    Rat::zero()
                } else {
                    right_frame.clone()
                };
                let y = match pos {
                    PathPos::Cross => Rat::zero(),
                    PathPos::Straddle { clause, below, far } => straddle_y(clause, below, far, h),
                };
                let line = v_line(lines, &x)?;
                placement.place(v, Point::new(x, y), line);
            }
            Role::LiteralPath { line, pos } => {
                let x = col_x(line);
                let y = match pos {
                    PathPos::Cross => Rat::zero(),
                    PathPos::Straddle { clause, below, far } => {
                        orient(line, straddle_y(clause, below, far, g))
                    }
                };
                let lref = v_line(lines, &x)?;
                placement.place(v, Point::new(x, y), lref);
            }
            Role::StarRay { line, below } => {
                let x = col_x(line);
                let y = orient(line, if below { -ys.clone() } else { ys.clone() });
                let lref = v_line(lines, &x)?;
                placement.place(v, Point::new(x, y), lref);
            }
            Role::DiamondTip {
                frame,
                clause,
                below,
                side,
            } => {
                let y = if below {
                    -clause_y[clause - 1].clone()
                } else {
                    clause_y[clause - 1].clone()
                };
                let x = match (frame, side) {
                    (Frame::L, TipSide::Inner) => tip.clone(),
                    (Frame::L, TipSide::Outer) => -tip.clone(),
                    (Frame::R, TipSide::Inner) => &right_frame - tip,
                    (Frame::R, TipSide::Outer) => &right_frame + tip,
                };
                let lref = h_line(lines, &y)?;
                placement.place(v, Point::new(x, y), lref);
            }
            Role::EndCycle { line, bottom, part } => {
                let up = bottom == flipped(line);
                let sign = if up { rat_int(1) } else { rat_int(-1) };
                match part {
                    EndPart::Apex => {
                        let x = col_x(line);
                        let lref = v_line(lines, &x)?;
                        placement.place(v, Point::new(x, &sign * &apex_y), lref);
                    }
                    EndPart::ShoulderLow | EndPart::ShoulderHigh => {
                        let k = if matches!(part, EndPart::ShoulderLow) {
                            2 * line as i64 - 2
                        } else {
                            2 * line as i64 - 1
                        };
                        let x = &shoulder_start + pitch * rat_int(k);
                        let y = &sign * &top;
                        let lref = h_line(lines, &y)?;
                        placement.place(v, Point::new(x, y), lref);
                    }
                }
            }
            Role::Flag { line, clause, top } => {
                let upper = top != flipped(line);
                flags_by_line.entry((clause, upper)).or_default().push((line, v));
            }
        }
    }

    for ((clause, upper), mut flags) in flags_by_line {
        let y = if upper {
            clause_y[clause - 1].clone()
        } else {
            -clause_y[clause - 1].clone()
        };
        let lref = h_line(lines, &y)?;
        // One flag per gap between consecutive literal lines; the end gaps
        // are blocked by the frame diamonds. Descending, prefer the right
        // side of the crossing.
        flags.sort_unstable();
        let mut gap_used = vec![false; n + 1];
        for &(line, v) in flags.iter().rev() {
            let x = if line <= n - 1 && !gap_used[line] {
                gap_used[line] = true;
                col_x(line) + flag_off
            } else if line >= 2 && !gap_used[line - 1] {
                gap_used[line - 1] = true;
                col_x(line) - flag_off
            } else {
                return Err(ReduceError::Invalid(format!(
                    "flag packing failed on clause line {} ({}): no free gap for literal {}",
                    clause,
                    if upper { "upper" } else { "lower" },
                    line
                )));
            };
            placement.place(v, Point::new(x, y.clone()), lref);
        }
    }

    Ok(placement)
}
