//! Shared fixtures for the benchmark targets.

use zs2x2_core::PayoffMatrix;

/// All 625 matrices with integer entries in -2..=2.
pub fn small_grid() -> Vec<PayoffMatrix> {
    let mut out = Vec::with_capacity(625);
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                for d in -2..=2 {
                    out.push(PayoffMatrix::from_ints(a, b, c, d));
                }
            }
        }
    }
    out
}
