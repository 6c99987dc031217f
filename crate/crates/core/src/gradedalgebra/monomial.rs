use std::fmt;

/// Wedge monomial `e_{i1} ∧ … ∧ e_{ia}` with strictly increasing 0-based
/// indices. The empty monomial is the unit (the constant 0-form `1`, or the
/// scalar multivector).
///
/// Ordering is lexicographic on the index tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(i: usize) -> Self {
        Monomial(vec![i])
    }

    pub fn pair(i: usize, j: usize) -> Self {
        assert!(i < j, "pair needs i < j");
        Monomial(vec![i, j])
    }

    /// Sorts arbitrary indices, returning the permutation sign, or `None`
    /// when an index repeats.
    pub fn from_indices(indices: &[usize]) -> Option<(i32, Monomial)> {
        let mut v = indices.to_vec();
        let mut sign = 1;
        // insertion sort, counting transpositions
        for a in 1..v.len() {
            let mut b = a;
            while b > 0 && v[b - 1] > v[b] {
                v.swap(b - 1, b);
                sign = -sign;
                b -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, Monomial(v)))
    }

    /// Sorted, duplicate-free indices are taken as is.
    pub fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Monomial(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `self ∧ other = sign · result`, or `None` when they share an index.
    pub fn wedge(&self, other: &Monomial) -> Option<(i32, Monomial)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut inversions = 0usize;
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() && b < other.0.len() {
            match self.0[a].cmp(&other.0[b]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[a]);
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    // other's element jumps over the rest of self
                    inversions += self.0.len() - a;
                    out.push(other.0[b]);
                    b += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&self.0[a..]);
        out.extend_from_slice(&other.0[b..]);
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Monomial(out)))
    }

    /// Monomial with position `s` removed.
    pub fn omit(&self, s: usize) -> Monomial {
        let mut v = self.0.clone();
        v.remove(s);
        Monomial(v)
    }

    /// All monomials in `n` variables, by degree then lexicographically.
    pub fn all(n: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for deg in 0..=n {
            out.extend(Self::of_degree(n, deg));
        }
        out
    }

    pub fn of_degree(n: usize, deg: usize) -> Vec<Monomial> {
        fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(Monomial(cur.clone()));
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if deg <= n {
            go(0, n, deg, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Renders with the given symbol names, `1` for the unit.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&i| names.get(i).cloned().unwrap_or_else(|| format!("e{}", i + 1)))
            .collect::<Vec<_>>()
            .join("^")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "{}", parts.join("^"))
    }
}
