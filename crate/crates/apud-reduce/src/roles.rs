use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Frame {
    L,
    R,
}

/// Which side of its frame line a diamond tip sits on; `Inner` faces the
/// literal columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TipSide {
    Inner,
    Outer,
}

/// The three extra vertices of an end 4-cycle, ordered by x-position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EndPart {
    ShoulderLow,
    Apex,
    ShoulderHigh,
}

/// Position of a vertex along a vertical path: the shared crossing with the
/// middle path, or one of the two disks straddling clause line `clause`
/// (1-based). `far` means the disk on the side away from the middle path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PathPos {
    Cross,
    Straddle { clause: usize, below: bool, far: bool },
}

/// Structural role of one instance vertex. Roles partition the vertex set
/// and are what the witness generator consumes: each role determines its
/// disk center up to the per-literal flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    /// Middle-path vertex between crossings `gap` and `gap + 1` (crossing 0
    /// is the left frame, crossing n+1 the right frame).
    PAlpha { gap: usize },
    PL { pos: PathPos },
    PR { pos: PathPos },
    LiteralPath { line: usize, pos: PathPos },
    /// The path vertex between a literal crossing and its first straddle
    /// pair; its only structural job is completing the crossing's 4-star.
    StarRay { line: usize, below: bool },
    DiamondTip {
        frame: Frame,
        clause: usize,
        below: bool,
        side: TipSide,
    },
    EndCycle {
        line: usize,
        bottom: bool,
        part: EndPart,
    },
    Flag {
        line: usize,
        clause: usize,
        top: bool,
    },
}

impl Role {
    pub fn is_flag(&self) -> bool {
        matches!(self, Role::Flag { .. })
    }
}
