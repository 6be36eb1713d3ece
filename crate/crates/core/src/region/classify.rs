//! Root-type classification of contractive polynomials.

use serde::Serialize;

use super::poly::MonicPolynomial;
use super::schur_cohn::schur_cohn_stable;
use super::sturm::{sturm_sequence, variations_at, variations_at_infinity};
use crate::exact::rational::int;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RootClassification {
    /// Some root lies on or outside the unit circle.
    Unstable,
    /// Stable and squarefree: `s` complex-conjugate pairs and `real_roots` real roots.
    Classified { s: usize, real_roots: usize },
    /// Stable but with a repeated root.
    Degenerate(String),
}

impl RootClassification {
    pub fn pairs(&self) -> Option<usize> {
        match self {
            RootClassification::Classified { s, .. } => Some(*s),
            _ => None,
        }
    }
}

pub fn classify(p: &MonicPolynomial) -> RootClassification {
    if !schur_cohn_stable(p) {
        return RootClassification::Unstable;
    }
    let poly = p.to_poly();
    let g = poly.gcd(&poly.derivative());
    if g.degree().unwrap_or(0) > 0 {
        return RootClassification::Degenerate(format!("repeated factor {g}"));
    }
    let seq = sturm_sequence(&poly);
    let on_line = variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true);
    let in_disk = variations_at(&seq, &int(-1)) - variations_at(&seq, &int(1));
    assert_eq!(on_line, in_disk, "stable polynomial with real roots outside (-1, 1): {poly}");
    let d = p.degree();
    RootClassification::Classified { s: (d - on_line) / 2, real_roots: on_line }
}
