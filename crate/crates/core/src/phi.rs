//! Exact arithmetic in Z[φ]/2: values m·φ + k/2 with integer m, k.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};

pub const PHI: f64 = 1.618_033_988_749_895;

/// m·φ + k/2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PhiNum {
    pub m: i64,
    pub k: i64,
}

impl PhiNum {
    pub const ZERO: PhiNum = PhiNum { m: 0, k: 0 };
    pub const PHI: PhiNum = PhiNum { m: 1, k: 0 };
    pub const HALF: PhiNum = PhiNum { m: 0, k: 1 };
    pub const ONE: PhiNum = PhiNum { m: 0, k: 2 };

    pub const fn new(m: i64, k: i64) -> PhiNum {
        PhiNum { m, k }
    }

    pub fn int(n: i64) -> PhiNum {
        PhiNum { m: 0, k: 2 * n }
    }

    pub fn is_zero(self) -> bool {
        self.m == 0 && self.k == 0
    }

    /// Sign of (m+k) + m√5, which is twice the value. Integer-only.
    pub fn signum(self) -> i32 {
        let a = (self.m + self.k) as i128;
        let b = self.m as i128;
        let sa = a.signum();
        let sb = b.signum();
        if sa == sb {
            return sa as i32;
        }
        if sa == 0 {
            return sb as i32;
        }
        if sb == 0 {
            return sa as i32;
        }
        // opposite signs: compare a² with 5b²
        match (a * a).cmp(&(5 * b * b)) {
            Ordering::Greater => sa as i32,
            Ordering::Less => sb as i32,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(self) -> PhiNum {
        if self.signum() < 0 {
            -self
        } else {
            self
        }
    }

    pub fn scale(self, n: i64) -> PhiNum {
        PhiNum { m: self.m * n, k: self.k * n }
    }

    pub fn to_f64(self) -> f64 {
        self.m as f64 * PHI + self.k as f64 / 2.0
    }

}

impl fmt::Display for PhiNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*phi+{}/2", self.m, self.k)
    }
}

impl Serialize for PhiNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.m, self.k].serialize(s)
    }
}

impl Ord for PhiNum {
    fn cmp(&self, other: &PhiNum) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl PartialOrd for PhiNum {
    fn partial_cmp(&self, other: &PhiNum) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for PhiNum {
    type Output = PhiNum;
    fn add(self, o: PhiNum) -> PhiNum {
        PhiNum { m: self.m + o.m, k: self.k + o.k }
    }
}

impl Sub for PhiNum {
    type Output = PhiNum;
    fn sub(self, o: PhiNum) -> PhiNum {
        PhiNum { m: self.m - o.m, k: self.k - o.k }
    }
}

impl Neg for PhiNum {
    type Output = PhiNum;
    fn neg(self) -> PhiNum {
        PhiNum { m: -self.m, k: -self.k }
    }
}

impl AddAssign for PhiNum {
    fn add_assign(&mut self, o: PhiNum) {
        *self = *self + o;
    }
}

impl SubAssign for PhiNum {
    fn sub_assign(&mut self, o: PhiNum) {
        *self = *self - o;
    }
}

impl Mul<i64> for PhiNum {
    type Output = PhiNum;
    fn mul(self, n: i64) -> PhiNum {
        self.scale(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn signs() {
        assert_eq!(PhiNum::PHI.signum(), 1);
        assert_eq!((-PhiNum::PHI).signum(), -1);
        assert_eq!(PhiNum::ZERO.signum(), 0);
        // φ - 1.5 > 0, φ - 2 < 0
        assert_eq!(PhiNum::new(1, -3).signum(), 1);
        assert_eq!(PhiNum::new(1, -4).signum(), -1);
        // 2φ - 3 = √5 - 2 > 0
        assert_eq!(PhiNum::new(2, -6).signum(), 1);
        assert!(PhiNum::PHI + PhiNum::HALF > PhiNum::int(2));
    }

    #[test]
    fn display() {
        assert_eq!(PhiNum::new(-1, 1).to_string(), "-1*phi+1/2");
    }

    proptest! {
        #[test]
        fn signum_matches_float(m in -100_000i64..100_000, k in -300_000i64..300_000) {
            let v = PhiNum::new(m, k);
            let f = v.to_f64();
            if f.abs() > 1e-6 {
                prop_assert_eq!(v.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn ordering_is_translation_invariant(a in -1000i64..1000, b in -1000i64..1000,
                                             c in -1000i64..1000, d in -1000i64..1000,
                                             e in -1000i64..1000, f in -1000i64..1000) {
            let x = PhiNum::new(a, b);
            let y = PhiNum::new(c, d);
            let z = PhiNum::new(e, f);
            prop_assert_eq!(x.cmp(&y), (x + z).cmp(&(y + z)));
        }
    }
}
