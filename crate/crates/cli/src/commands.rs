//! One function per subcommand. Each builds a [`ReportDocument`] and
//! re-verifies every witness it prints by exact multiplication.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use solvgenus::centralizer::{centralizer_description, commutes, SquareRelation};
use solvgenus::classification::{classify, ClassificationReport, SplittingType};
use solvgenus::commensurability::intertwiner;
use solvgenus::conjugacy::{are_conjugate, classes_of_trace, cyclic_word, Group};
use solvgenus::figure::{render_figure, Palette};
use solvgenus::geometry::{alpha_arc, axis, hits_order2_cone, translation_length, QuadraticIrrational};
use solvgenus::{Error, IntMatrix2};

use crate::report::ReportDocument;

pub enum Failure {
    Parse(String),
    Domain(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Palette(_) => Failure::Parse(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

pub fn parse_matrix(text: &str) -> Outcome<IntMatrix2> {
    text.parse::<IntMatrix2>()
        .map_err(|e| Failure::Parse(format!("{text:?}: {e}")))
}

pub fn parse_integer(text: &str) -> Outcome<BigInt> {
    text.trim()
        .parse::<BigInt>()
        .map_err(|e| Failure::Parse(format!("{text:?}: {e}")))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn round_trips(m: &IntMatrix2) -> bool {
    m.to_string().parse::<IntMatrix2>().ok().as_ref() == Some(m)
}

pub fn classify_report(l: &IntMatrix2) -> Outcome<(ReportDocument, ClassificationReport)> {
    let report = classify(l)?;
    let mut doc = ReportDocument::new("classify", json!({ "matrix": l.to_string() }), to_value(&report));
    doc.extend(report.verify());
    doc.check("matrix text round-trip", round_trips(l));
    Ok((doc, report))
}

pub fn classify_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "monodromy  {}  trace {}", r.input, r.trace);
    let _ = writeln!(s, "Anosov     yes  [|trace| > 2]");
    let _ = writeln!(s, "genus      {}  [genus-2 criterion: a curve meets its image once]", r.genus);
    match &r.standard_form {
        Some(sf) => {
            let _ = writeln!(
                s,
                "standard   K = {}  (det {}), K L K^-1 = {}  [standard-form criterion]",
                sf.conjugator,
                sf.conjugator_det,
                sf.target()
            );
            if let Some(w) = &r.witness_curve {
                let _ = writeln!(s, "witness    curve {} with |Q_L| = 1  [unit representation]", w);
            }
        }
        None => {
            let _ = writeln!(s, "standard   none: no curve meets its image once  [genus-2 criterion]");
        }
    }
    let tag = if r.irreducible_splitting_count == 2 {
        "[trace-3 uniqueness of the conjugacy class, two splittings]"
    } else if r.genus == 2 {
        "[uniqueness of genus-2 splittings for |trace| > 3]"
    } else {
        "[standard genus-3 splitting]"
    };
    let _ = writeln!(
        s,
        "splittings {} irreducible, {}  {tag}",
        r.irreducible_splitting_count,
        match r.splitting_type {
            SplittingType::StronglyIrreducibleGenus2 => "strongly irreducible genus 2",
            SplittingType::WeaklyReducibleGenus3 => "weakly reducible genus 3",
        }
    );
    for (i, sp) in r.spines.iter().enumerate() {
        let curves: Vec<String> = sp
            .curves
            .iter()
            .map(|c| format!("{} at level {}", c.original, c.level))
            .collect();
        if curves.is_empty() {
            let _ = writeln!(s, "spine {}    {}", i + 1, sp.text);
        } else {
            let _ = writeln!(s, "spine {}    {}: {}", i + 1, sp.text, curves.join(", "));
        }
    }
    if let Some(inv) = &r.involution_data {
        let _ = writeln!(
            s,
            "involution rho = {}; rho L rho = L^-1: {}; rho(alpha) = -L(alpha): {}; L(gamma) = rho(gamma): {}",
            inv.rho, inv.rho_l_rho_is_inverse, inv.rho_alpha_is_neg_l_alpha, inv.l_gamma_is_rho_gamma
        );
    }
    for n in &r.notes {
        let _ = writeln!(s, "note       {n}");
    }
    s
}

pub fn conjugate(a: &IntMatrix2, b: &IntMatrix2, group: Group) -> Outcome<ReportDocument> {
    let k = are_conjugate(a, b, group)?;
    let (sa, wa) = cyclic_word(a)?;
    let (sb, wb) = cyclic_word(b)?;
    let group_name = match group {
        Group::Sl => "sl",
        Group::Gl => "gl",
    };
    let result = json!({
        "group": group_name,
        "conjugate": k.is_some(),
        "conjugator": k,
        "word_a": { "sign": sa, "word": wa },
        "word_b": { "sign": sb, "word": wb },
    });
    let mut doc = ReportDocument::new(
        "conjugate",
        json!({ "a": a.to_string(), "b": b.to_string(), "group": group_name }),
        result,
    );
    if let Some(k) = &k {
        doc.check("K A = B K", (k * a) == (b * k));
        let det_ok = match group {
            Group::Sl => k.is_sl2(),
            Group::Gl => k.is_unimodular(),
        };
        doc.check("det K in group", det_ok);
    } else if group == Group::Sl {
        doc.check("distinct cyclic words", (sa, &wa) != (sb, &wb));
    }
    Ok(doc)
}

pub fn classes(t: &BigInt) -> Outcome<ReportDocument> {
    let list = classes_of_trace(t)?;
    let mut doc = ReportDocument::new(
        "classes",
        json!({ "trace": t.to_string() }),
        json!({ "count": list.len(), "classes": list }),
    );
    let mut words_ok = true;
    let mut trace_ok = true;
    for cl in &list {
        trace_ok &= cl.representative.is_sl2() && cl.representative.trace() == *t;
        words_ok &= cyclic_word(&cl.representative)? == (cl.sign, cl.word.clone());
    }
    doc.check("representatives in SL(2,Z) with the given trace", trace_ok);
    doc.check("representative words are canonical", words_ok);
    let mut distinct = list.iter().map(|c| &c.word).collect::<Vec<_>>();
    distinct.dedup();
    doc.check("words pairwise distinct", distinct.len() == list.len());
    Ok(doc)
}

pub fn centralizer(l: &IntMatrix2) -> Outcome<ReportDocument> {
    let desc = centralizer_description(l)?;
    let incidence = hits_order2_cone(l)?;
    let mut doc = ReportDocument::new(
        "centralizer",
        json!({ "matrix": l.to_string() }),
        json!({ "centralizer": desc, "order2_cone": incidence }),
    );
    if let Some(g) = &desc.gl_extra {
        doc.check("B commutes with L", commutes(&g.matrix, l));
        doc.check("det B = -1", g.matrix.det() == -BigInt::one());
        let sq = &g.matrix * &g.matrix;
        let expected = match g.square {
            SquareRelation::Base => l.clone(),
            SquareRelation::NegBase => -l,
            SquareRelation::Inverse => l.inverse()?,
            SquareRelation::NegInverse => -&l.inverse()?,
            SquareRelation::Other => sq.clone(),
        };
        doc.check(format!("B^2 = {}", g.square), sq == expected && g.square != SquareRelation::Other);
    }
    if let Some(k) = &desc.reversing_witness {
        doc.check("K L K^-1 = L^-1", k.is_sl2() && (k * l) == (&l.inverse()? * k));
    }
    doc.check("reversible iff |m| = 3", desc.reversible == (l.trace().abs() == BigInt::from(3)));
    doc.check("order-2 cone incidence iff reversible", incidence.hits == desc.reversible);
    Ok(doc)
}

pub fn commensurable(a: &IntMatrix2, b: &IntMatrix2) -> Outcome<ReportDocument> {
    let w = intertwiner(a, b)?;
    let mut doc = ReportDocument::new(
        "commensurable",
        json!({ "a": a.to_string(), "b": b.to_string() }),
        json!({ "virtually_conjugate": w.is_some(), "intertwiner": w }),
    );
    match &w {
        Some(w) => {
            doc.check("P A = B P", (&w.p * a) == (b * &w.p));
            doc.check("det P != 0", !w.p.det().is_zero());
            doc.check("index = |det P|", w.p.det().abs() == w.index);
        }
        None => doc.check("traces differ", a.trace() != b.trace()),
    }
    Ok(doc)
}

fn fixed_point_residual(l: &IntMatrix2, z: &QuadraticIrrational) -> solvgenus::Result<QuadraticIrrational> {
    let c = QuadraticIrrational::integer(l.c.clone());
    let dma = QuadraticIrrational::integer(&l.d - &l.a);
    let b = QuadraticIrrational::integer(l.b.clone());
    c.mul(z)?.mul(z)?.add(&dma.mul(z)?)?.sub(&b)
}

pub fn geodesic(l: &IntMatrix2) -> Outcome<ReportDocument> {
    let g = axis(l)?;
    let incidence = hits_order2_cone(l)?;
    let is_standard = l.b == -BigInt::one() && l.c.is_one() && l.d.is_zero();
    let arc = if is_standard { Some(alpha_arc(&l.a)?) } else { None };
    let mut doc = ReportDocument::new(
        "geodesic",
        json!({ "matrix": l.to_string() }),
        json!({ "axis": g, "alpha_arc": arc, "order2_cone": incidence }),
    );
    for (name, z) in [("z+", &g.endpoints.1), ("z-", &g.endpoints.0)] {
        let r = fixed_point_residual(l, z)?;
        doc.check(format!("c {name}^2 + (d-a) {name} - b = 0"), r.is_rational() && r.signum().is_eq());
    }
    let t = l.trace();
    let tf = t.abs().to_f64().unwrap_or(f64::INFINITY);
    let lambda = (tf + (tf * tf - 4.0).sqrt()) / 2.0;
    doc.check(
        "|translation_length - 2 ln lambda| <= 1e-12",
        (translation_length(&t) - 2.0 * lambda.ln()).abs() <= 1e-12,
    );
    if let Some(arc) = &arc {
        doc.extend(arc.orthogonality.clone());
    }
    if let Some(k) = &incidence.reversing_witness {
        doc.check("K L K^-1 = L^-1", (k * l) == (&l.inverse()? * k));
    }
    Ok(doc)
}

pub fn figure(m: &BigInt, output: &std::path::Path, palette: Option<&std::path::Path>) -> Outcome<ReportDocument> {
    let palette = match palette {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Palette::from_toml(&text)?
        }
        None => Palette::default(),
    };
    let svg = render_figure(m, &palette)?;
    let arc = alpha_arc(m)?;
    std::fs::write(output, &svg).map_err(|e| Failure::Io(format!("{}: {e}", output.display())))?;
    let mut doc = ReportDocument::new(
        "figure",
        json!({ "m": m.to_string(), "output": output.display().to_string() }),
        json!({ "output": output.display().to_string(), "bytes": svg.len(), "alpha_arc": arc }),
    );
    doc.extend(arc.orthogonality.clone());
    Ok(doc)
}
