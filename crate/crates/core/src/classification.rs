//! Heegaard genus and irreducible splittings of the mapping torus `M_L`.
//!
//! For Anosov `L` the manifold has genus 2 exactly when some curve meets
//! its image once, equivalently when `L` is conjugate to
//! `[[trace, -1], [1, 0]]`. Genus-2 splittings are strongly irreducible and
//! unique up to isotopy, except for `|trace| = 3` where there are exactly
//! two. Otherwise the only irreducible splitting is the weakly reducible
//! standard genus-3 one.
//!
//! The splitting counts are consequences of those theorems; this module
//! computes their hypotheses exactly and attaches verifiable witnesses.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Serialize, Serializer};

use crate::algebra::{apply, monodromy_form, require_anosov, IntMatrix2, PrimitiveSlope};
use crate::centralizer::centralizer_description;
use crate::conjugacy::{represent_unit, UnitWitness};
use crate::error::{Error, Result};

/// A conjugation of `L` onto `[[m_signed, -1], [1, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardFormResult {
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub m_signed: BigInt,
    pub conjugator: IntMatrix2,
    pub conjugator_det: i8,
    pub unit_value: i8,
}

impl StandardFormResult {
    pub fn target(&self) -> IntMatrix2 {
        IntMatrix2::standard_form(self.m_signed.clone())
    }

    /// `K L K^{-1}` equals the standard form entrywise.
    pub fn verify(&self, l: &IntMatrix2) -> bool {
        self.conjugator.is_unimodular()
            && &self.conjugator * l == &self.target() * &self.conjugator
    }
}

/// Conjugates `L` to standard form using a curve `v` with `|Q_L(v)| = 1`.
///
/// With `Q_L(v) = 1` the basis `(-Lv, v)` has determinant 1 and `L` acts
/// on it as `[[t,-1],[1,0]]`. With only `Q_L(v) = -1` available the basis
/// `(Lv, v)` gives the mirror `[[t,1],[-1,0]]`, which `diag(1,-1)` carries
/// to the standard form at the cost of a det -1 conjugator.
pub fn standard_form(l: &IntMatrix2) -> Result<Option<StandardFormResult>> {
    require_anosov(l)?;
    // the curve (0,1) is already the standard one when Q_L(0,1) = 1
    let e2 = PrimitiveSlope::new(0, 1)?;
    let w = if (-&l.b).is_one() {
        Some(UnitWitness { curve: e2, value: 1 })
    } else {
        represent_unit(l)?
    };
    let Some(w) = w else {
        return Ok(None);
    };
    let (p, q) = w.curve.vector();
    let (lp, lq) = l.apply_vec(p, q);
    let result = if w.value == 1 {
        let basis = IntMatrix2::from_columns((&-&lp, &-&lq), (p, q));
        StandardFormResult {
            m_signed: l.trace(),
            conjugator: basis.inverse()?,
            conjugator_det: 1,
            unit_value: 1,
        }
    } else {
        let basis = IntMatrix2::from_columns((&lp, &lq), (p, q));
        StandardFormResult {
            m_signed: l.trace(),
            conjugator: &IntMatrix2::reflection() * &basis.inverse()?,
            conjugator_det: -1,
            unit_value: -1,
        }
    };
    debug_assert!(result.verify(l));
    Ok(Some(result))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplittingType {
    StronglyIrreducibleGenus2,
    WeaklyReducibleGenus3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpineKind {
    Genus2,
    StandardGenus3,
}

/// Height in the fiber direction `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Zero,
    Half,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Zero => "0",
            Level::Half => "1/2",
        })
    }
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpineCurve {
    /// In the basis where the monodromy is in standard form.
    pub standard: PrimitiveSlope,
    /// The same curve in the input coordinates.
    pub original: PrimitiveSlope,
    pub level: Level,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpineDescription {
    pub kind: SpineKind,
    pub curves: Vec<SpineCurve>,
    pub text: String,
}

/// Matrix identities behind the pair of splittings when `|trace| = 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionData {
    pub rho: IntMatrix2,
    pub rho_l_rho_is_inverse: bool,
    pub rho_alpha_is_neg_l_alpha: bool,
    pub l_gamma_is_rho_gamma: bool,
    pub alpha: PrimitiveSlope,
    pub beta: PrimitiveSlope,
    pub gamma: PrimitiveSlope,
    pub fixed_circles: Vec<String>,
    pub central_involution_note: String,
}

impl InvolutionData {
    pub fn all_hold(&self) -> bool {
        self.rho_l_rho_is_inverse && self.rho_alpha_is_neg_l_alpha && self.l_gamma_is_rho_gamma
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub input: IntMatrix2,
    #[serde(serialize_with = "crate::algebra::ser_display")]
    pub trace: BigInt,
    pub anosov: bool,
    pub genus: u8,
    pub irreducible_splitting_count: u8,
    pub splitting_type: SplittingType,
    pub standard_form: Option<StandardFormResult>,
    /// SL(2,Z)-conjugate to the standard form; false in the mirror case,
    /// where only a det -1 conjugator exists.
    pub sl_conjugate_to_standard: bool,
    pub orientation_reversing_identification: bool,
    pub witness_curve: Option<PrimitiveSlope>,
    pub spines: Vec<SpineDescription>,
    pub involution_data: Option<InvolutionData>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    /// Every exact identity the report relies on, re-checked from scratch.
    pub fn verify(&self) -> Vec<(String, bool)> {
        let l = &self.input;
        let mut out = vec![
            ("input in SL(2,Z)".to_string(), l.is_sl2()),
            ("|trace| > 2".to_string(), l.trace().abs() > BigInt::from(2)),
            (
                "genus 2 iff standard form iff witness curve".to_string(),
                (self.genus == 2) == self.standard_form.is_some()
                    && self.standard_form.is_some() == self.witness_curve.is_some(),
            ),
            (
                "two splittings iff |trace| = 3".to_string(),
                (self.irreducible_splitting_count == 2)
                    == (self.genus == 2 && self.trace.abs() == BigInt::from(3)),
            ),
        ];
        if let Some(sf) = &self.standard_form {
            out.push(("K L K^-1 = [[t,-1],[1,0]]".to_string(), sf.verify(l)));
            out.push((
                "det K = conjugator_det".to_string(),
                sf.conjugator.det() == BigInt::from(sf.conjugator_det),
            ));
        }
        if let Some(w) = &self.witness_curve {
            let ok = monodromy_form(l)
                .map(|f| {
                    let (p, q) = w.vector();
                    f.eval(p, q).abs().is_one()
                })
                .unwrap_or(false);
            out.push(("|Q_L(witness)| = 1".to_string(), ok));
        }
        if let Some(inv) = &self.involution_data {
            out.push(("rho L rho = L^-1".to_string(), inv.rho_l_rho_is_inverse));
            out.push(("rho(alpha) = -L(alpha)".to_string(), inv.rho_alpha_is_neg_l_alpha));
            out.push(("L(gamma) = rho(gamma)".to_string(), inv.l_gamma_is_rho_gamma));
        }
        out
    }
}

pub fn classify(l: &IntMatrix2) -> Result<ClassificationReport> {
    require_anosov(l)?;
    let trace = l.trace();
    let sf = standard_form(l)?;
    let (spines, involution_data) = splitting_descriptors(l, sf.as_ref())?;
    let mut notes = Vec::new();
    let report = match &sf {
        Some(sf) => {
            let three = trace.abs() == BigInt::from(3);
            if three {
                notes.push(
                    "two non-isotopic genus-2 splittings; their hyperelliptic involutions commute \
                     and multiply to the central involution -I (topological fact, cited)"
                        .to_string(),
                );
            } else {
                notes.push(
                    "all irreducible splittings are isotopic (topological fact, cited)".to_string(),
                );
            }
            if sf.conjugator_det == -1 {
                notes.push(
                    "only Q_L = -1 is represented: the identification with the standard form \
                     reverses orientation; genus and count are unaffected"
                        .to_string(),
                );
            }
            let witness = apply(&sf.conjugator.inverse()?, &PrimitiveSlope::new(0, 1)?)?;
            ClassificationReport {
                input: l.clone(),
                trace: trace.clone(),
                anosov: true,
                genus: 2,
                irreducible_splitting_count: if three { 2 } else { 1 },
                splitting_type: SplittingType::StronglyIrreducibleGenus2,
                sl_conjugate_to_standard: sf.conjugator_det == 1,
                orientation_reversing_identification: sf.conjugator_det == -1,
                standard_form: Some(sf.clone()),
                witness_curve: Some(witness),
                spines,
                involution_data,
                notes,
            }
        }
        None => {
            notes.push(
                "no curve meets its image once; the standard genus-3 splitting is the only \
                 irreducible one and it is weakly reducible (topological fact, cited)"
                    .to_string(),
            );
            ClassificationReport {
                input: l.clone(),
                trace,
                anosov: true,
                genus: 3,
                irreducible_splitting_count: 1,
                splitting_type: SplittingType::WeaklyReducibleGenus3,
                standard_form: None,
                sl_conjugate_to_standard: false,
                orientation_reversing_identification: false,
                witness_curve: None,
                spines,
                involution_data: None,
                notes,
            }
        }
    };
    Ok(report)
}

/// Spines of the irreducible splittings, in standard-form coordinates and
/// transported back to the input basis. For `|trace| = 3` also checks the
/// involution identities that distinguish the two splittings.
pub fn splitting_descriptors(
    l: &IntMatrix2,
    sf: Option<&StandardFormResult>,
) -> Result<(Vec<SpineDescription>, Option<InvolutionData>)> {
    require_anosov(l)?;
    let Some(sf) = sf else {
        return Ok((vec![genus3_spine()], None));
    };
    if sf.m_signed != l.trace() || !sf.verify(l) {
        return Err(Error::InconsistentWitness);
    }
    let to_original = sf.conjugator.inverse()?;
    let curve = |standard: PrimitiveSlope, level: Level| -> Result<SpineCurve> {
        Ok(SpineCurve {
            original: apply(&to_original, &standard)?,
            standard,
            level,
        })
    };
    let alpha = PrimitiveSlope::new(0, 1)?;
    let mut spines = vec![SpineDescription {
        kind: SpineKind::Genus2,
        curves: vec![curve(alpha.clone(), Level::Zero)?],
        text: "λ ∪ (α × {0}): the vertical circle λ (image of {0}×R) joined to the curve α \
               on the fiber T²×{0}; a regular neighbourhood is a genus-2 handlebody side"
            .to_string(),
    }];
    if sf.m_signed.abs() != BigInt::from(3) {
        return Ok((spines, None));
    }

    let std_l = sf.target();
    let extra = centralizer_description(&std_l)?
        .gl_extra
        .expect("|m| = 3 has a det -1 centralizer element");
    let beta = apply(&extra.matrix, &alpha)?;
    // gamma = (2, 3) for m = 3; its reflection for m = -3
    let gamma = if sf.m_signed.is_positive() {
        PrimitiveSlope::new(2, 3)?
    } else {
        PrimitiveSlope::new(-2, 3)?
    };
    spines.push(SpineDescription {
        kind: SpineKind::Genus2,
        curves: vec![curve(beta.clone(), Level::Half)?],
        text: "λ ∪ (β × {1/2}): the vertical circle λ joined to β = B(α) on the fiber \
               T²×{1/2}, B the det -1 element commuting with the monodromy"
            .to_string(),
    });

    let rho = IntMatrix2::swap();
    let rho_l_rho = &(&rho * &std_l) * &rho;
    let l_alpha = std_l.apply_vec(alpha.p(), alpha.q());
    let rho_alpha = rho.apply_vec(alpha.p(), alpha.q());
    let involution = InvolutionData {
        rho_l_rho_is_inverse: rho_l_rho == std_l.inverse()?,
        rho_alpha_is_neg_l_alpha: rho_alpha == (-l_alpha.0, -l_alpha.1),
        l_gamma_is_rho_gamma: apply(&std_l, &gamma)? == apply(&rho, &gamma)?,
        fixed_circles: vec![
            format!("β × {{1/2}} with β = {beta}"),
            format!("γ × {{0}} with γ = {gamma}"),
        ],
        central_involution_note: format!(
            "ρ(x1, x2) = (x2, x1) conjugates L to L^-1; the hyperelliptic involutions of \
             the two splittings commute and their product is the central involution -I, \
             which is not isotopic to the identity (cited). Check gamma: L(γ) = {}",
            apply(&std_l, &gamma)?
        ),
        rho,
        alpha,
        beta,
        gamma,
    };
    Ok((spines, Some(involution)))
}

fn genus3_spine() -> SpineDescription {
    SpineDescription {
        kind: SpineKind::StandardGenus3,
        curves: Vec::new(),
        text: "standard genus-3 splitting: fibers T²×{0} and T²×{1/2} with a vertical tube \
               on each side, E_A × [1/2,1] and E_B × [0,1/2], where E_B is disjoint from L(E_A)"
            .to_string(),
    }
}
