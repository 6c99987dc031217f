use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalarfield::Poly;

/// Finite linear combination of generators with `Q[t]` coefficients.
/// Zero coefficients are never stored; iteration follows `G`'s order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<G: Ord> {
    terms: BTreeMap<G, Poly>,
}

impl<G: Ord> Default for LinComb<G> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<G: Ord + Clone> LinComb<G> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(g: G, c: Poly) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (G, Poly)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn add_term(&mut self, g: G, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<G>, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for (g, x) in other.iter() {
            self.add_term(g.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> Poly {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, G, Poly> {
        self.terms.iter()
    }

    pub fn generators(&self) -> impl Iterator<Item = &G> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self::from_terms(self.iter().map(|(g, c)| (g.clone(), f(c))))
    }
}

impl<G: Ord + Clone> FromIterator<(G, Poly)> for LinComb<G> {
    fn from_iter<I: IntoIterator<Item = (G, Poly)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, G: Ord> IntoIterator for &'a LinComb<G> {
    type Item = (&'a G, &'a Poly);
    type IntoIter = btree_map::Iter<'a, G, Poly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<G: Ord + Clone> Add for &LinComb<G> {
    type Output = LinComb<G>;
    fn add(self, rhs: &LinComb<G>) -> LinComb<G> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Poly::from_int(1));
        out
    }
}

impl<G: Ord + Clone> Sub for &LinComb<G> {
    type Output = LinComb<G>;
    fn sub(self, rhs: &LinComb<G>) -> LinComb<G> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Poly::from_int(-1));
        out
    }
}

impl<G: Ord + Clone> Neg for &LinComb<G> {
    type Output = LinComb<G>;
    fn neg(self) -> LinComb<G> {
        self.scale(&Poly::from_int(-1))
    }
}

impl<G: Ord + fmt::Display> fmt::Display for LinComb<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "({c}) {g}")?;
            }
        }
        Ok(())
    }
}

impl<G: Ord + fmt::Debug> fmt::Debug for LinComb<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
