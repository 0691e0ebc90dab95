//! Caps on exhaustive enumeration over all cylinders of one rank.

use crate::error::{Error, Result};

pub const MAX_RANK_ENV: &str = "RADIXFORGE_MAX_RANK";

/// Default cap: at most `2^20` cylinders per enumeration.
pub const DEFAULT_MAX_BITS: u32 = 20;

/// `RADIXFORGE_MAX_RANK` when set to an integer, else [`DEFAULT_MAX_BITS`].
pub fn max_bits() -> u32 {
    std::env::var(MAX_RANK_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_BITS)
}

/// `s^rank` when it does not exceed `2^max_bits`.
pub fn cylinder_count(base: u32, rank: usize, max_bits: u32) -> Result<u64> {
    let limit = 1u64 << max_bits.min(62);
    let mut count = 1u64;
    for _ in 0..rank {
        count = match count.checked_mul(base as u64) {
            Some(c) if c <= limit => c,
            _ => {
                return Err(Error::EnumerationTooLarge {
                    count: format!("{base}^{rank}"),
                    limit,
                })
            }
        };
    }
    Ok(count)
}
