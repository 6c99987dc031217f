use std::cmp::Ordering;
use std::fmt;

use crate::gradedalgebra::{form_superdegree, Monomial};

/// Basis element of `h ⊕ g0'`: a basis vector of the chosen subalgebra
/// `g0'` (index into its basis) or a basis monomial of `Λ g*`.
///
/// Total order: vectors first by index, then forms by decreasing form
/// degree, then lexicographically. Canonical chain words therefore read
/// like `y1⋀z2⋀1` or `y1⋀y2⋀(z1^z2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Vector(usize),
    Form(Monomial),
}

impl Generator {
    pub fn superdegree(&self) -> i64 {
        match self {
            Generator::Vector(_) => 0,
            Generator::Form(m) => form_superdegree(m.degree()),
        }
    }

    pub fn is_odd(&self) -> bool {
        self.superdegree().rem_euclid(2) == 1
    }

    pub fn unit_form() -> Self {
        Generator::Form(Monomial::unit())
    }

    pub fn as_form(&self) -> Option<&Monomial> {
        match self {
            Generator::Form(m) => Some(m),
            Generator::Vector(_) => None,
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Generator::Vector(a), Generator::Vector(b)) => a.cmp(b),
            (Generator::Vector(_), Generator::Form(_)) => Ordering::Less,
            (Generator::Form(_), Generator::Vector(_)) => Ordering::Greater,
            (Generator::Form(a), Generator::Form(b)) => {
                b.degree().cmp(&a.degree()).then_with(|| a.cmp(b))
            }
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Vector(i) => write!(f, "y{}", i + 1),
            Generator::Form(m) if m.degree() == 0 => write!(f, "1"),
            Generator::Form(m) => {
                let parts: Vec<String> = m.indices().iter().map(|i| format!("z{}", i + 1)).collect();
                write!(f, "{}", parts.join("^"))
            }
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
