//! Chain spaces of a Lie superalgebra: the free super-commutative algebra on
//! its generators, graded by length `m` and weight (sum of super degrees),
//! with the boundary operator `∂ : C_m → C_{m-1}`.
//!
//! Words are written `Y1⋀…⋀Ym`. Adjacent generators of parities `x`, `y`
//! satisfy `X⋀Y = -(-1)^{xy} Y⋀X`: two odd generators commute, every other
//! pair anticommutes, and an even generator squares to zero.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::brackets::SuperBracket;
use crate::gradedalgebra::{sign_poly, LinComb};
use crate::scalarfield::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("generators of both positive and negative super degree give infinite-dimensional weight spaces")]
    UnboundedChains,
    #[error("difference and double-sum forms disagree; their difference is {0}")]
    SbtEsMismatch(String),
}

/// A canonically ordered word: generators ascending, even generators at
/// most once, odd generators possibly repeated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperWord<G>(Vec<G>);

/// A linear combination of canonical words with `Q[t]` coefficients.
pub type ChainElement<G> = LinComb<SuperWord<G>>;

impl<G: Ord + Clone> SuperWord<G> {
    /// The empty word, spanning `C_0`.
    pub fn empty() -> Self {
        SuperWord(Vec::new())
    }

    pub fn generators(&self) -> &[G] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight<B: SuperBracket<Gen = G>>(&self, b: &B) -> i64 {
        self.0.iter().map(|g| b.degree(g)).sum()
    }

    pub fn render<B: SuperBracket<Gen = G>>(&self, b: &B) -> String {
        if self.0.is_empty() {
            return "∅".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|g| {
                let s = b.render(g);
                if s.contains('^') {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect();
        parts.join("⋀")
    }
}

fn odd<B: SuperBracket>(b: &B, g: &B::Gen) -> bool {
    b.is_odd(g)
}

/// Sorts a raw generator sequence into canonical order, returning the sign
/// picked up, or `None` when an even generator repeats.
pub fn normalize<B: SuperBracket>(b: &B, raw: Vec<B::Gen>) -> Option<(i32, SuperWord<B::Gen>)> {
    let mut v = raw;
    let mut sign = 1;
    for a in 1..v.len() {
        let mut k = a;
        while k > 0 && v[k - 1] > v[k] {
            if !(odd(b, &v[k - 1]) && odd(b, &v[k])) {
                sign = -sign;
            }
            v.swap(k - 1, k);
            k -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1] && !odd(b, &w[0])) {
        return None;
    }
    Some((sign, SuperWord(v)))
}

/// The single-word chain `1·word` after normalization.
pub fn chain_of<B: SuperBracket>(b: &B, raw: Vec<B::Gen>) -> ChainElement<B::Gen> {
    let mut out = LinComb::zero();
    if let Some((s, w)) = normalize(b, raw) {
        out.add_term(w, Poly::from_int(s as i64));
    }
    out
}

/// Canonical words of length `m` and weight `w`, ascending.
pub fn enumerate_basis<B: SuperBracket>(b: &B, m: usize, w: i64) -> Vec<SuperWord<B::Gen>> {
    let gens = b.generators();
    let degs: Vec<i64> = gens.iter().map(|g| b.degree(g)).collect();
    let n = gens.len();
    // extreme degrees available from position k on
    let mut lo = vec![i64::MAX; n + 1];
    let mut hi = vec![i64::MIN; n + 1];
    for k in (0..n).rev() {
        lo[k] = lo[k + 1].min(degs[k]);
        hi[k] = hi[k + 1].max(degs[k]);
    }
    struct Ctx<'a, B: SuperBracket> {
        b: &'a B,
        degs: Vec<i64>,
        lo: Vec<i64>,
        hi: Vec<i64>,
        out: Vec<SuperWord<B::Gen>>,
    }
    fn go<B: SuperBracket>(cx: &mut Ctx<'_, B>, k: usize, left: usize, w: i64, cur: &mut Vec<B::Gen>) {
        if left == 0 {
            if w == 0 {
                cx.out.push(SuperWord(cur.clone()));
            }
            return;
        }
        let gens = cx.b.generators();
        if k == gens.len() {
            return;
        }
        let l = left as i64;
        if w < cx.lo[k].saturating_mul(l) || w > cx.hi[k].saturating_mul(l) {
            return;
        }
        let max_mult = if cx.b.is_odd(&gens[k]) { left } else { 1 };
        for mult in (0..=max_mult).rev() {
            for _ in 0..mult {
                cur.push(gens[k].clone());
            }
            go(cx, k + 1, left - mult, w - cx.degs[k] * mult as i64, cur);
            for _ in 0..mult {
                cur.pop();
            }
        }
    }
    if m == 0 {
        return if w == 0 { vec![SuperWord::empty()] } else { Vec::new() };
    }
    let mut cx = Ctx {
        b,
        degs,
        lo,
        hi,
        out: Vec::new(),
    };
    go(&mut cx, 0, m, w, &mut Vec::new());
    cx.out
}

/// Largest `m` with `C_m^w` possibly nonzero: each degree-0 generator can
/// appear once, every other generator moves the weight by at least one.
pub fn max_length<B: SuperBracket>(b: &B, w: i64) -> Result<usize, ChainError> {
    let degs: Vec<i64> = b.generators().iter().map(|g| b.degree(g)).collect();
    if degs.iter().any(|&d| d > 0) && degs.iter().any(|&d| d < 0) {
        return Err(ChainError::UnboundedChains);
    }
    Ok(degs.iter().filter(|&&d| d == 0).count() + w.unsigned_abs() as usize)
}

/// `∂(Y1⋀…⋀Ym) = Σ_{i<j} (-1)^{i-1 + y_i Σ_{i<s<j} y_s} Y1⋀…Ŷi…⋀[Yi,Yj]⋀…⋀Ym`
/// with the bracket in slot `j`, on any (not necessarily canonical) word.
pub fn boundary_raw<B: SuperBracket>(b: &B, word: &[B::Gen]) -> ChainElement<B::Gen> {
    let par: Vec<i64> = word.iter().map(|g| i64::from(b.is_odd(g))).collect();
    let mut out = LinComb::zero();
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            let br = b.bracket(&word[i], &word[j]);
            if br.is_zero() {
                continue;
            }
            let mid: i64 = par[i + 1..j].iter().sum();
            let sign = sign_poly(i as i64 + par[i] * mid);
            for (g, c) in &br {
                let mut raw = word.to_vec();
                raw[j] = g.clone();
                raw.remove(i);
                out.add_scaled(&chain_of(b, raw), &(&sign * c));
            }
        }
    }
    out
}

pub fn boundary<B: SuperBracket>(b: &B, c: &ChainElement<B::Gen>) -> ChainElement<B::Gen> {
    let mut out = LinComb::zero();
    for (w, coeff) in c {
        out.add_scaled(&boundary_raw(b, w.generators()), coeff);
    }
    out
}

/// Boundaries of many words, computed in parallel.
pub fn boundaries<B: SuperBracket>(
    b: &B,
    words: &[SuperWord<B::Gen>],
) -> Vec<ChainElement<B::Gen>> {
    words.par_iter().map(|w| boundary_raw(b, w.generators())).collect()
}

/// Super wedge product of two chains.
pub fn wedge_chains<B: SuperBracket>(
    b: &B,
    x: &ChainElement<B::Gen>,
    y: &ChainElement<B::Gen>,
) -> ChainElement<B::Gen> {
    let mut out = LinComb::zero();
    for (wx, cx) in x {
        for (wy, cy) in y {
            let mut raw = wx.generators().to_vec();
            raw.extend_from_slice(wy.generators());
            out.add_scaled(&chain_of(b, raw), &(cx * cy));
        }
    }
    out
}

fn sbt_es_difference<B: SuperBracket>(
    b: &B,
    a: &SuperWord<B::Gen>,
    c: &SuperWord<B::Gen>,
) -> ChainElement<B::Gen> {
    let wa = LinComb::term(a.clone(), Poly::from_int(1));
    let wc = LinComb::term(c.clone(), Poly::from_int(1));
    let whole = boundary(b, &wedge_chains(b, &wa, &wc));
    let left = wedge_chains(b, &boundary(b, &wa), &wc);
    let right = wedge_chains(b, &wa, &boundary(b, &wc)).scale(&sign_poly(a.len() as i64));
    &(&whole - &left) - &right
}

/// `Σ_{i,j} (-1)^{i + a_i Σ_{s>i} a_s + j + b_j Σ_{s<j} b_s}
///  A1⋀…Âi…⋀[Ai,Bj]⋀B1⋀…B̂j…`.
fn sbt_es_double_sum<B: SuperBracket>(
    b: &B,
    a: &SuperWord<B::Gen>,
    c: &SuperWord<B::Gen>,
) -> ChainElement<B::Gen> {
    let (ag, cg) = (a.generators(), c.generators());
    let pa: Vec<i64> = ag.iter().map(|g| i64::from(b.is_odd(g))).collect();
    let pc: Vec<i64> = cg.iter().map(|g| i64::from(b.is_odd(g))).collect();
    let mut out = LinComb::zero();
    for i in 0..ag.len() {
        let after_i: i64 = pa[i + 1..].iter().sum();
        for j in 0..cg.len() {
            let br = b.bracket(&ag[i], &cg[j]);
            if br.is_zero() {
                continue;
            }
            let before_j: i64 = pc[..j].iter().sum();
            // 1-based positions: (i+1) + (j+1) has the parity of i + j
            let sign = sign_poly(i as i64 + j as i64 + pa[i] * after_i + pc[j] * before_j);
            for (g, coeff) in &br {
                let mut raw: Vec<B::Gen> = ag[..i].iter().chain(&ag[i + 1..]).cloned().collect();
                raw.push(g.clone());
                raw.extend(cg[..j].iter().chain(&cg[j + 1..]).cloned());
                out.add_scaled(&chain_of(b, raw), &(&sign * coeff));
            }
        }
    }
    out
}

/// `∂(A⋀B) - (∂A)⋀B - (-1)^{|A|} A⋀∂B` for chains `A`, `B`, where `|A|` is
/// the length of each word of `A`. Also evaluates the explicit double sum
/// over brackets `[A_i, B_j]` and fails if the two disagree.
pub fn sbt_es<B: SuperBracket>(
    b: &B,
    x: &ChainElement<B::Gen>,
    y: &ChainElement<B::Gen>,
) -> Result<ChainElement<B::Gen>, ChainError> {
    let mut diff = LinComb::zero();
    let mut double = LinComb::zero();
    for (wx, cx) in x {
        for (wy, cy) in y {
            let c = cx * cy;
            diff.add_scaled(&sbt_es_difference(b, wx, wy), &c);
            double.add_scaled(&sbt_es_double_sum(b, wx, wy), &c);
        }
    }
    let gap = &diff - &double;
    if !gap.is_zero() {
        let rendered: Vec<String> = gap
            .iter()
            .map(|(w, c)| format!("({c})*{}", w.render(b)))
            .collect();
        return Err(ChainError::SbtEsMismatch(rendered.join(" + ")));
    }
    Ok(diff)
}

/// Lookup table from basis word to position.
pub fn index_of<G: Ord + Clone + std::hash::Hash>(basis: &[SuperWord<G>]) -> HashMap<SuperWord<G>, usize> {
    basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()
}
