//! Arithmetic over Z_n: unit detection, unit enumeration, Euler phi.

use crate::error::{Error, Result};

/// Greatest common divisor by the Euclidean algorithm.
///
/// Errors if both inputs are zero (the gcd is undefined there).
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidArgument(
            "gcd(0, 0) is undefined".to_string(),
        ));
    }
    Ok(gcd_unchecked(a, b))
}

fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Primality by trial division. Moduli here are tiny, so nothing fancier
/// is warranted.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The ring Z_n together with its unit set U(Z_n) and Euler phi value.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueRing {
    modulus: u64,
    units: Vec<u64>,
    phi: u64,
}

impl ResidueRing {
    /// Builds Z_n, materializing the sorted unit list and phi = |units|.
    ///
    /// Errors for n < 2.
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidArgument(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        let units: Vec<u64> = (1..modulus)
            .filter(|&a| gcd_unchecked(a, modulus) == 1)
            .collect();
        let phi = units.len() as u64;
        Ok(Self {
            modulus,
            units,
            phi,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted list of units in [1, n-1].
    pub fn units(&self) -> &[u64] {
        &self.units
    }

    /// Euler phi of the modulus.
    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// Whether residue `a` is a unit, i.e. gcd(a, n) = 1.
    ///
    /// Membership is decided by gcd, not by searching the unit list.
    /// Errors if `a` is not a residue in [0, n-1].
    pub fn is_unit(&self, a: u64) -> Result<bool> {
        if a >= self.modulus {
            return Err(Error::InvalidArgument(format!(
                "residue {a} out of range for modulus {}",
                self.modulus
            )));
        }
        Ok(self.is_unit_unchecked(a))
    }

    pub(crate) fn is_unit_unchecked(&self, a: u64) -> bool {
        gcd_unchecked(a, self.modulus) == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_small_cases() {
        assert_eq!(gcd(12, 8).unwrap(), 4);
        assert_eq!(gcd(7, 1).unwrap(), 1);
        assert_eq!(gcd(10, 0).unwrap(), 10);
        assert_eq!(gcd(0, 10).unwrap(), 10);
    }

    #[test]
    fn gcd_both_zero_is_an_error() {
        assert!(matches!(gcd(0, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn unit_membership() {
        let z5 = ResidueRing::new(5).unwrap();
        assert!(z5.is_unit(3).unwrap());
        assert!(!z5.is_unit(0).unwrap());
        let z10 = ResidueRing::new(10).unwrap();
        assert!(!z10.is_unit(5).unwrap()); // gcd(5, 10) = 5
        assert!(matches!(z5.is_unit(5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn ring_construction() {
        let z5 = ResidueRing::new(5).unwrap();
        assert_eq!(z5.units(), &[1, 2, 3, 4]);
        assert_eq!(z5.phi(), 4);

        let z6 = ResidueRing::new(6).unwrap();
        assert_eq!(z6.units(), &[1, 5]);
        assert_eq!(z6.phi(), 2);

        let z2 = ResidueRing::new(2).unwrap();
        assert_eq!(z2.units(), &[1]);
        assert_eq!(z2.phi(), 1);
    }

    #[test]
    fn ring_rejects_tiny_moduli() {
        assert!(ResidueRing::new(0).is_err());
        assert!(ResidueRing::new(1).is_err());
    }

    #[test]
    fn prime_moduli_have_full_unit_set() {
        for n in 2..200u64 {
            if !is_prime(n) {
                continue;
            }
            let ring = ResidueRing::new(n).unwrap();
            assert_eq!(ring.phi(), n - 1);
            assert_eq!(ring.units(), (1..n).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn twice_odd_prime_units_are_odd() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let ring = ResidueRing::new(2 * p).unwrap();
            assert_eq!(ring.phi(), p - 1);
            assert!(ring.units().iter().all(|u| u % 2 == 1));
        }
    }

    #[test]
    fn trial_division_matches_known_primes() {
        let primes: Vec<u64> = (2..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(!is_prime(0));
        assert!(!is_prime(1));
    }

    proptest! {
        #[test]
        fn gcd_divides_both_and_is_symmetric(a in 0u64..10_000, b in 1u64..10_000) {
            let g = gcd(a, b).unwrap();
            prop_assert!(g >= 1);
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
            prop_assert_eq!(g, gcd(b, a).unwrap());
        }

        #[test]
        fn units_are_closed_under_inversion(n in 2u64..300) {
            let ring = ResidueRing::new(n).unwrap();
            prop_assert!(ring.units().contains(&1));
            prop_assert_eq!(ring.units().len() as u64, ring.phi());
            prop_assert!(ring.units().windows(2).all(|w| w[0] < w[1]));
            for &u in ring.units() {
                let has_inverse = ring.units().iter().any(|&v| (u * v) % n == 1);
                prop_assert!(has_inverse, "{} has no inverse mod {}", u, n);
            }
        }
    }
}
