use std::fmt;
use std::sync::Arc;

use super::{poly_xgcd, Poly, Rational};
use crate::linalg::{Scalar, ZeroDivisor};

/// The residue ring `Q[t]/(p)` for a monic squarefree `p`.
///
/// When `p` is irreducible this is a number field and elimination over it
/// gives the rank at every root of `p` at once. When `p` factors, trying to
/// invert a nonzero non-unit exposes a proper factor ([`ZeroDivisor`]) and
/// the caller splits the modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct ResidueRing {
    modulus: Arc<Poly>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    value: Poly,
    modulus: Arc<Poly>,
}

impl ResidueRing {
    /// `modulus` is normalized to its monic associate.
    ///
    /// # Panics
    /// On a constant modulus.
    pub fn new(modulus: &Poly) -> Self {
        assert!(
            !modulus.is_constant(),
            "residue ring needs a nonconstant modulus"
        );
        ResidueRing {
            modulus: Arc::new(modulus.monic()),
        }
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn reduce(&self, p: &Poly) -> Residue {
        Residue {
            value: p.rem(&self.modulus).expect("nonzero modulus"),
            modulus: Arc::clone(&self.modulus),
        }
    }

    /// For a linear modulus `t - r` this is evaluation at `r`.
    pub fn rational_point(&self) -> Option<Rational> {
        (self.modulus.degree() == Some(1)).then(|| -self.modulus.coeff(0))
    }
}

impl Residue {
    pub fn value(&self) -> &Poly {
        &self.value
    }

    fn wrap(&self, value: Poly) -> Residue {
        Residue {
            value: value.rem(&self.modulus).expect("nonzero modulus"),
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl Scalar for Residue {
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self.wrap(&self.value + &o.value)
    }
    fn sub(&self, o: &Self) -> Self {
        self.wrap(&self.value - &o.value)
    }
    fn mul(&self, o: &Self) -> Self {
        self.wrap(&self.value * &o.value)
    }
    fn try_inv(&self) -> Result<Self, ZeroDivisor> {
        let (g, s, _) = poly_xgcd(&self.value, &self.modulus);
        if g.is_zero() {
            return Err(ZeroDivisor(self.modulus.as_ref().clone()));
        }
        if !g.is_constant() {
            return Err(ZeroDivisor(g));
        }
        Ok(self.wrap(s))
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod ({})", self.value, self.modulus)
    }
}
