//! Size limits for the brute-force enumerators.

use std::env;

/// Maximum sizes accepted by the exhaustive enumerators. Defaults keep every
/// oracle run within a few seconds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Longest `[g-1,-1]` bridge, in steps (`gn`).
    pub dyck_len: usize,
    /// Longest `[g-1,0,-1]` bridge, in steps.
    pub motzkin_len: usize,
    /// Longest closed square-lattice walk.
    pub walk_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dyck_len: 16,
            motzkin_len: 14,
            walk_len: 12,
        }
    }
}

pub const DYCK_ENV: &str = "LUKASIEWICZ_MAX_DYCK_LEN";
pub const MOTZKIN_ENV: &str = "LUKASIEWICZ_MAX_MOTZKIN_LEN";
pub const WALK_ENV: &str = "LUKASIEWICZ_MAX_WALK_LEN";

impl Limits {
    /// Defaults, overridden by `LUKASIEWICZ_MAX_{DYCK,MOTZKIN,WALK}_LEN` when set.
    pub fn from_env() -> Self {
        let read = |key: &str, fallback: usize| {
            env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(fallback)
        };
        let d = Limits::default();
        Limits {
            dyck_len: read(DYCK_ENV, d.dyck_len),
            motzkin_len: read(MOTZKIN_ENV, d.motzkin_len),
            walk_len: read(WALK_ENV, d.walk_len),
        }
    }
}
