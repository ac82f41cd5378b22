use crate::error::{Error, Result};

/// Guardrails for the exponential enumerations.
///
/// `max_subset_edges` bounds every scan over `2^|E|` edge subsets (and the
/// nested `3^|E|` scans, which are only ever run where `2^|E|` is allowed).
/// `max_assignments` bounds scans over residue vectors such as `k^|E|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_subset_edges: u32,
    pub max_assignments: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_subset_edges: 24,
            max_assignments: 1 << 24,
        }
    }
}

impl Caps {
    pub fn unbounded() -> Self {
        Caps {
            max_subset_edges: 63,
            max_assignments: u64::MAX,
        }
    }

    pub fn check_subsets(&self, what: &'static str, edges: usize) -> Result<()> {
        if edges > self.max_subset_edges as usize || edges >= 64 {
            return Err(Error::cap(
                what,
                format!("2^{edges}"),
                format!("2^{}", self.max_subset_edges),
            ));
        }
        Ok(())
    }

    /// Checks `base^exponent <= max_assignments` and returns the power.
    pub fn check_assignments(&self, what: &'static str, base: u64, exponent: usize) -> Result<u64> {
        let total = u32::try_from(exponent)
            .ok()
            .and_then(|e| base.checked_pow(e))
            .filter(|&n| n <= self.max_assignments);
        total.ok_or_else(|| Error::cap(what, format!("{base}^{exponent}"), self.max_assignments))
    }
}
