use crate::error::{Error, Result};

/// Environment variable overriding the enumeration limits.
pub const MAX_N_VAR: &str = "CRYSTALLOGRAPH_MAX_N";

/// Largest node counts accepted by the exhaustive and group-search
/// operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Weyl-group searches (`|W(BC_6)| = 46080`).
    pub weyl: usize,
    /// `enumerate_crystallographs` in `all` / `quasi` mode.
    pub enumerate: usize,
    /// `enumerate_crystallographs` in `up_to_weyl` mode.
    pub up_to_weyl: usize,
    /// Brute-force subsystem enumeration over symmetric subsets.
    pub bruteforce: usize,
    /// `verify_all`.
    pub verify: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            weyl: 6,
            enumerate: 4,
            up_to_weyl: 5,
            bruteforce: 4,
            verify: 6,
        }
    }
}

impl Limits {
    /// Defaults, with `CRYSTALLOGRAPH_MAX_N` (if set and numeric) replacing
    /// the three enumeration limits.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_N_VAR).ok().and_then(|v| v.trim().parse().ok()) {
            limits.enumerate = n;
            limits.up_to_weyl = n;
            limits.bruteforce = n;
        }
        limits
    }

    pub(crate) fn check(what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(Error::LimitExceeded { what, n, limit })
        } else {
            Ok(())
        }
    }
}
