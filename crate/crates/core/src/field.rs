//! Prime fields `F_q` holding the message symbols.

use crate::error::{Error, Result};

/// A prime field size. Only prime `q` is supported, so arithmetic is plain
/// modular arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    q: u32,
}

impl FieldSpec {
    pub fn new(q: u32) -> Result<Self> {
        if is_prime(q) {
            Ok(Self { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn binary() -> Self {
        Self { q: 2 }
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.q
    }

    /// Product of two field elements. Both operands must already be reduced.
    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    /// `q^f` if it stays within `limit`.
    pub fn assignment_count(self, f: usize, limit: u64) -> Option<u64> {
        let mut n: u64 = 1;
        for _ in 0..f {
            n = n.checked_mul(self.q as u64)?;
            if n > limit {
                return None;
            }
        }
        Some(n)
    }
}

pub fn field_mul(a: u32, b: u32, spec: FieldSpec) -> u32 {
    spec.mul(a, b)
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
