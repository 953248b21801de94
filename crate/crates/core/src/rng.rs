//! Deterministic pseudo-random stream for sampled checks.
//!
//! A fixed linear congruential generator so that reports are reproducible
//! bit for bit across runs and across language ports:
//!
//! ```text
//! x_{k+1} = 6364136223846793005 * x_k + 1442695040888963407   (mod 2^64)
//! ```
//!
//! The state is initialized to the seed itself and each draw first steps the
//! state, then uses the high 32 bits. `below(m)` maps a draw into `0..m` by
//! the multiply-shift `(hi32 * m) >> 32`.

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

const MUL: u64 = 6364136223846793005;
const INC: u64 = 1442695040888963407;

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MUL).wrapping_add(INC);
        self.state
    }

    fn high32(&mut self) -> u64 {
        self.next_u64() >> 32
    }

    /// Uniform draw in `0..m` for `m <= 2^32`.
    pub fn below(&mut self, m: u64) -> u64 {
        debug_assert!(m > 0 && m <= (1 << 32));
        ((self.high32() as u128 * m as u128) >> 32) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let mut a = Lcg::new(42);
        let mut b = Lcg::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn first_draws_from_seed_zero() {
        // Frozen values of the documented recurrence; a change here is a
        // report-format change.
        let mut r = Lcg::new(0);
        assert_eq!(r.next_u64(), 1442695040888963407);
        assert_eq!(r.next_u64(), 1876011003808476466);
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = Lcg::new(7);
        for _ in 0..1000 {
            assert!(r.below(11) < 11);
        }
    }
}
