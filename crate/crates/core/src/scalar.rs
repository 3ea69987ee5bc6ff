use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Numeric type the model can be evaluated in.
///
/// `zero_tolerance` is the half-width of the band inside which a change in
/// availability counts as "no change". Exact types use zero.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + FromPrimitive + ToPrimitive {
    fn zero_tolerance() -> Self;

    /// `1 / hops`, exact whenever the type can represent it.
    fn reciprocal(hops: u32) -> Self {
        Self::one() / Self::from_u32(hops).expect("hop count representable")
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn zero_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn zero_tolerance() -> Self {
        1e-6
    }
}

impl Scalar for BigRational {
    fn zero_tolerance() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }

    fn reciprocal(hops: u32) -> Self {
        BigRational::new(BigInt::from(1), BigInt::from(hops))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_is_exact_for_rationals() {
        let third = <BigRational as Scalar>::reciprocal(3);
        assert_eq!(
            third * BigRational::from_integer(3.into()),
            BigRational::from_integer(1.into())
        );
        assert_eq!(<f64 as Scalar>::reciprocal(4), 0.25);
    }

    #[test]
    fn rational_converts_to_f64() {
        let x = BigRational::new(224.into(), 324.into());
        assert!((x.to_f64_lossy() - 224.0 / 324.0).abs() < 1e-15);
    }
}
