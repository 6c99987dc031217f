use std::sync::Arc;

use super::check_superjacobi;
use crate::brackets::{DeformationSpec, DeformedBracket, DeformedSuperalgebra, Generator};
use crate::gradedalgebra::LinComb;
use crate::liecore::{catalog, OneForm};

/// A catalog algebra and closed 1-form on which the `F ≡ 1` bracket
/// violates super Jacobi.
#[derive(Debug, Clone)]
pub struct NaiveDtWitness {
    pub algebra: &'static str,
    pub phi: OneForm,
    pub elements: Vec<Generator>,
    pub defect: LinComb<Generator>,
}

/// Searches catalog algebras up to `max_dim` with closed basis 1-forms for a
/// super Jacobi violation of the `F ≡ 1` bracket. `None` means no witness
/// exists among them.
pub fn search_naive_dt_counterexample(max_dim: usize) -> Option<NaiveDtWitness> {
    for (name, alg) in catalog::named() {
        let n = alg.dim();
        if n > max_dim {
            continue;
        }
        let alg = Arc::new(alg);
        for k in 0..n {
            let phi = OneForm::basis(n, k);
            if !alg.is_closed(&phi) {
                continue;
            }
            let br = DeformedBracket::new(Arc::clone(&alg), DeformationSpec::naive_dt(phi.clone()))
                .expect("dimension matches");
            let report = check_superjacobi(&DeformedSuperalgebra::forms_only(br));
            if let Some(w) = report.witness() {
                return Some(NaiveDtWitness {
                    algebra: name,
                    phi,
                    elements: w.elements.clone(),
                    defect: w.defect.clone(),
                });
            }
        }
    }
    None
}
