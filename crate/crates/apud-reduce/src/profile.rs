use crate::ReduceError;
use apud_geometry::rational::{rat, rat_int, rat_string, serde_rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Spacing constants for instance layouts, all exact rationals.
///
/// The frame is built from the flexibility parameter `epsilon`: vertical
/// lines sit `4 - epsilon` apart and clause lines `2 + epsilon` apart, so
/// consecutive disks along a line can touch while disks across lines
/// cannot. The remaining fields position the disks of each gadget relative
/// to its line crossing; `default()` derives values that satisfy every
/// separation constraint for `epsilon = 1/10`, and [`LayoutProfile::with_epsilon`]
/// re-derives them for other choices. A profile is only usable once
/// [`LayoutProfile::validate`] and the end-to-end witness verifier accept it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutProfile {
    /// The flexibility constant, `0 < epsilon < 1`.
    #[serde(with = "serde_rat")]
    pub epsilon: Rat,
    /// First clause line height `C_1`; line `C_j` sits at `C_1 + (j-1)(2+eps)`.
    #[serde(with = "serde_rat")]
    pub first_clause: Rat,
    /// Literal-path pairs straddle their clause line at `C_j -+ straddle_gap`.
    #[serde(with = "serde_rat")]
    pub straddle_gap: Rat,
    /// Frame-path pairs straddle their clause line at `C_j -+ frame_gap`.
    #[serde(with = "serde_rat")]
    pub frame_gap: Rat,
    /// Diamond tips sit this far from the frame line, on the clause line.
    #[serde(with = "serde_rat")]
    pub tip_offset: Rat,
    /// Flag disks sit this far from their literal line, on the clause line.
    #[serde(with = "serde_rat")]
    pub flag_offset: Rat,
    /// Height of the path vertex between a crossing and its first pair.
    #[serde(with = "serde_rat")]
    pub spacer_gap: Rat,
    /// Pitch of the end-cycle shoulder disks along the top/bottom lines.
    #[serde(with = "serde_rat")]
    pub shoulder_pitch: Rat,
    /// How far the end-cycle apex rises above the top line.
    #[serde(with = "serde_rat")]
    pub apex_rise: Rat,
}

impl Default for LayoutProfile {
    fn default() -> Self {
        LayoutProfile {
            epsilon: rat(1, 10),
            first_clause: rat(29, 10),
            straddle_gap: rat(4, 5),
            frame_gap: rat(19, 20),
            tip_offset: rat(17, 10),
            flag_offset: rat(8, 5),
            spacer_gap: rat(11, 10),
            shoulder_pitch: rat(101, 50),
            apex_rise: rat_int(1),
        }
    }
}

/// Smallest-denominator rational `r` with `lo2 < r^2 <= hi2` (both bounds
/// given as squares). Used to pick tip and flag offsets whose squared
/// distances must land in a narrow window.
fn rational_in_sqrt_range(lo2: &Rat, hi2: &Rat) -> Option<Rat> {
    for den in 1u64..=100_000 {
        let d = BigInt::from(den);
        // Smallest num with (num/den)^2 > lo2.
        let scaled = lo2 * Rat::from_integer(&d * &d);
        let floor = scaled.floor().to_integer();
        let num = if floor.is_negative() {
            BigInt::one()
        } else {
            floor.sqrt() + 1
        };
        let cand = Rat::new(num, d);
        if &cand * &cand <= *hi2 {
            return Some(cand);
        }
    }
    None
}

impl LayoutProfile {
    /// Derives a full profile from `epsilon` alone and validates it.
    pub fn with_epsilon(epsilon: Rat) -> Result<Self, ReduceError> {
        if epsilon <= Rat::zero() || epsilon >= rat(1, 4) {
            return Err(ReduceError::ProfileInfeasible(format!(
                "epsilon must lie in (0, 1/4), got {}",
                rat_string(&epsilon)
            )));
        }
        let one = rat_int(1);
        let two = rat_int(2);
        let four = rat_int(4);
        let q = &two + &epsilon;
        let first_clause = rat_int(3) - &epsilon;
        let straddle_gap = &one - rat_int(2) * &epsilon;
        let frame_gap = &one - &epsilon / &two;
        let spacer_gap = &one + &epsilon;
        let apex_rise = one.clone();
        let shoulder_pitch = &two + &epsilon / rat_int(5);

        let sq = |r: &Rat| r * r;
        let max2 = |a: Rat, b: Rat| if a >= b { a } else { b };
        let min2 = |a: Rat, b: Rat| if a <= b { a } else { b };
        // Strict upper bound `offset < 4 - epsilon - 2` (clearing the
        // neighboring column), kept with a small margin so the non-strict
        // range search stays sound.
        let col_clear2 = sq(&(&two - &epsilon)) - sq(&epsilon) / &four;

        let tip_lo2 = max2(&four - sq(&(&q - &frame_gap)), one.clone());
        let tip_hi2 = min2(&four - sq(&frame_gap), col_clear2.clone());
        let tip_offset = rational_in_sqrt_range(&tip_lo2, &tip_hi2)
            .ok_or_else(|| ReduceError::ProfileInfeasible("no rational tip offset".into()))?;

        let flag_lo2 = max2(
            max2(
                &four - sq(&(&q - &straddle_gap)),
                sq(&(&one - &epsilon / &two)),
            ),
            &four - sq(&(&two - rat_int(2) * &epsilon)),
        );
        let flag_hi2 = min2(&four - sq(&straddle_gap), col_clear2);
        let flag_offset = rational_in_sqrt_range(&flag_lo2, &flag_hi2)
            .ok_or_else(|| ReduceError::ProfileInfeasible("no rational flag offset".into()))?;

        let profile = LayoutProfile {
            epsilon,
            first_clause,
            straddle_gap,
            frame_gap,
            tip_offset,
            flag_offset,
            spacer_gap,
            shoulder_pitch,
            apex_rise,
        };
        profile.validate()?;
        Ok(profile)
    }

    /// Vertical-line pitch `4 - epsilon`.
    pub fn column_pitch(&self) -> Rat {
        rat_int(4) - &self.epsilon
    }

    /// Clause-line pitch `2 + epsilon`; also the gap from the last clause
    /// line to the top line.
    pub fn clause_pitch(&self) -> Rat {
        rat_int(2) + &self.epsilon
    }

    /// Clause line height `C_j` for 1-based `j`.
    pub fn clause_line(&self, j: usize) -> Rat {
        &self.first_clause + self.clause_pitch() * rat_int(j as i64 - 1)
    }

    /// Height of the top frame line `T` given the number of clause pairs.
    pub fn top_line(&self, clause_pairs: usize) -> Rat {
        self.clause_line(clause_pairs) + self.clause_pitch()
    }

    /// Largest shoulder offset from its literal line when `n` shoulder
    /// pairs are packed along the top line at `shoulder_pitch`, centered.
    pub fn max_shoulder_offset(&self, n: usize) -> Rat {
        let drift = rat_int(2) * &self.shoulder_pitch - self.column_pitch();
        &self.shoulder_pitch / rat_int(2) + rat_int(n as i64 - 1) * drift / rat_int(2)
    }

    /// x-position of the leftmost shoulder disk (shared by top and bottom).
    pub fn shoulder_start(&self, n: usize) -> Rat {
        self.column_pitch() - self.max_shoulder_offset(n)
    }

    /// Every static separation constraint of the layout, exactly. Each rule
    /// states that two disks which must intersect stay within squared
    /// distance 4 or that two which must not stay strictly outside.
    pub fn validate(&self) -> Result<(), ReduceError> {
        let two = rat_int(2);
        let four = rat_int(4);
        let eps = &self.epsilon;
        let d = self.column_pitch();
        let q = self.clause_pitch();
        let c1 = &self.first_clause;
        let g = &self.straddle_gap;
        let h = &self.frame_gap;
        let t = &self.tip_offset;
        let f = &self.flag_offset;
        let ys = &self.spacer_gap;
        let p = &self.shoulder_pitch;
        let ar = &self.apex_rise;
        let sq = |r: &Rat| r * r;

        let checks: Vec<(&str, bool)> = vec![
            ("epsilon in (0,1)", eps > &Rat::zero() && eps < &rat_int(1)),
            ("gaps positive", g > &Rat::zero() && h > &Rat::zero() && ar > &Rat::zero()),
            ("crossing reaches spacer", ys <= &two),
            ("opposite spacers clear", ys > &rat_int(1)),
            ("crossing clears first pair", &(c1 - g) > &two),
            ("spacer reaches first pair", &(c1 - g - ys) <= &two),
            ("spacer clears far pair disk", &(c1 + g - ys) > &two),
            ("straddle pair intersects", &(rat_int(2) * g) <= &two),
            ("pair chain intersects", &(&q - rat_int(2) * g) <= &two),
            ("pair chain ordered", &(rat_int(2) * g) < &q),
            ("frame crossing reaches pair", &(c1 - h) <= &two),
            ("frame pair intersects", &(rat_int(2) * h) <= &two),
            ("frame chain intersects", &(&q - rat_int(2) * h) <= &two),
            ("frame chain ordered", &(rat_int(2) * h) < &q),
            ("frame crossing clears far disk", &(c1 + h) > &two),
            ("tip reaches straddle pair", &(sq(t) + sq(h)) <= &four),
            ("tip clears next pair", &(sq(t) + sq(&(&q - h))) > &four),
            ("opposite tips clear", t > &rat_int(1)),
            ("tip clears literal column", &(&d - t) > &two),
            ("flag reaches straddle pair", &(sq(f) + sq(g)) <= &four),
            ("flag clears next pair", &(sq(f) + sq(&(&q - g))) > &four),
            ("facing flags collide", &(&d - rat_int(2) * f) < &two),
            ("flag clears neighbor column", &(&d - f) > &two),
            ("flag clears spacer", &(sq(f) + sq(&(c1 - ys))) > &four),
            ("tip clears nearest flag", &(&d + f - t) > &two),
            ("shoulders clear each other", p > &two),
            ("apex clears path top", &(&q - g + ar) > &two),
            ("top line clears clause flags", &q > &two),
            (
                "alpha spacing clears spacers",
                &(sq(&(&d / &two)) + sq(ys)) > &four,
            ),
            ("alpha path intersects", &(&d / &two) <= &two),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(ReduceError::ProfileInfeasible(format!(
                    "constraint violated: {}",
                    name
                )));
            }
        }
        Ok(())
    }

    /// Per-instance feasibility: the shoulder packing must keep every
    /// shoulder within reach of its column's path top and apex while
    /// clearing the neighboring columns. Bounds how many literal lines one
    /// `epsilon` supports.
    pub fn feasible_for(&self, n: usize) -> Result<(), ReduceError> {
        self.validate()?;
        if n == 0 {
            return Err(ReduceError::Invalid("need at least one literal".into()));
        }
        let four = rat_int(4);
        let o = self.max_shoulder_offset(n);
        let dy_top = self.clause_pitch() - &self.straddle_gap;
        let sq = |r: &Rat| r * r;
        let checks: Vec<(&str, bool)> = vec![
            (
                "shoulder reaches path top",
                &(sq(&o) + sq(&dy_top)) <= &four,
            ),
            (
                "shoulder reaches apex",
                &(sq(&o) + sq(&self.apex_rise)) <= &four,
            ),
            (
                "shoulder clears neighbor column",
                &(self.column_pitch() - &o) > &rat_int(2),
            ),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(ReduceError::ProfileInfeasible(format!(
                    "epsilon {} cannot support {} literal lines: {}",
                    rat_string(&self.epsilon),
                    n,
                    name
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_profile_is_valid() {
        let p = LayoutProfile::default();
        p.validate().unwrap();
        for n in 1..=8 {
            p.feasible_for(n).unwrap();
        }
        assert!(p.feasible_for(12).is_err());
    }

    #[test]
    fn derived_profiles_match_default_at_one_tenth() {
        let p = LayoutProfile::with_epsilon(rat(1, 10)).unwrap();
        assert_eq!(p.first_clause, rat(29, 10));
        assert_eq!(p.straddle_gap, rat(4, 5));
        assert_eq!(p.frame_gap, rat(19, 20));
        assert_eq!(p.spacer_gap, rat(11, 10));
        assert_eq!(p.shoulder_pitch, rat(101, 50));
        // Tip/flag offsets are picked by search; they must satisfy validate.
        p.validate().unwrap();
    }

    #[test]
    fn smaller_epsilon_supports_more_columns() {
        let p = LayoutProfile::with_epsilon(rat(1, 40)).unwrap();
        p.feasible_for(20).unwrap();
    }

    #[test]
    fn silly_epsilon_is_rejected() {
        assert!(LayoutProfile::with_epsilon(rat(1, 2)).is_err());
        assert!(LayoutProfile::with_epsilon(rat(0, 1)).is_err());
        assert!(LayoutProfile::with_epsilon(rat(-1, 10)).is_err());
    }

    #[test]
    fn clause_lines_and_top() {
        let p = LayoutProfile::default();
        assert_eq!(p.clause_line(1), rat(29, 10));
        assert_eq!(p.clause_line(2), rat(5, 1));
        assert_eq!(p.clause_line(3), rat(71, 10));
        assert_eq!(p.top_line(3), rat(92, 10));
    }

    #[test]
    fn serde_round_trip() {
        let p = LayoutProfile::default();
        let js = serde_json::to_string(&p).unwrap();
        let back: LayoutProfile = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
