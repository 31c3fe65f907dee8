use thiserror::Error;

use crate::permgroup::GroupKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator {label} for {kind}: allowed labels are {allowed}")]
    InvalidGenerator {
        label: i32,
        kind: GroupKind,
        allowed: String,
    },

    #[error("invalid rank {rank} for type {ty}")]
    InvalidRank { ty: &'static str, rank: usize },

    #[error("{perm} is not an element of {kind}")]
    NotInGroup { perm: String, kind: GroupKind },

    #[error("group kinds do not match: {0} vs {1}")]
    KindMismatch(GroupKind, GroupKind),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("letter {letter} is not in the {alphabet} alphabet of rank {rank}")]
    LetterNotInAlphabet {
        letter: String,
        alphabet: String,
        rank: usize,
    },

    #[error("statistic {statistic} is not defined on {alphabet} words")]
    StatisticMismatch {
        statistic: &'static str,
        alphabet: String,
    },

    #[error("variable index {index} outside window [{lo}, {hi}]")]
    WindowOverflow { index: i32, lo: i32, hi: i32 },

    #[error("negative-index variable x[{0}] in a finite specialization")]
    NegativeVariable(i32),

    #[error("cutoff q^{cutoff} is not above the soundness bound q^{bound}")]
    SoundnessBound { cutoff: i64, bound: i64 },

    #[error("fixed-point-free involutions require an even rank, got {0}")]
    OddFpfRank(usize),

    #[error("{0} is not reachable from the start element")]
    Unreachable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
