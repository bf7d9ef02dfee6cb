//! Relation catalogs of the parenthesized framed braid operad and its
//! genus-`g` modules, as pairs of braid words.

use super::eval::Evaluator;
use super::word::{commutator, parse_word, BraidMorphism, Letter};
use super::BraidError;
use crate::equations::Report;
use crate::scalar::Scalar;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// The available relation catalogs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Catalog {
    /// Framed genus zero: `R1, R2, F, H1, H2, P`.
    PaBf,
    /// Framed genus `g`: `Rg, Dg, Ng, E1g, E2g`.
    PaBfG(usize),
    /// Alternative framed genus `g` presentation in the generators `A~, B~`.
    PaBfGBis(usize),
    /// Unframed genus one.
    PaB1,
    /// The reformulation `Nbis` of `Dg`.
    LE1(usize),
    /// Defining equations of the genus-`g` Grothendieck–Teichmüller group
    /// (symbolic only).
    GTg(usize),
}

impl Catalog {
    /// Parse a catalog name (`PaBf`, `PaBf_g`, `PaBf_g_bis`, `PaB_1`, `LE1`,
    /// `GT_g`); `g` is used by the genus catalogs.
    pub fn parse(name: &str, g: usize) -> Result<Self, BraidError> {
        let needs_g = |c: fn(usize) -> Catalog| {
            if g == 0 {
                Err(BraidError::Parse(format!("catalog {name} needs g >= 1")))
            } else {
                Ok(c(g))
            }
        };
        match name {
            "PaBf" => Ok(Catalog::PaBf),
            "PaBf_g" => needs_g(Catalog::PaBfG),
            "PaBf_g_bis" => needs_g(Catalog::PaBfGBis),
            "PaB_1" => Ok(Catalog::PaB1),
            "LE1" => needs_g(Catalog::LE1),
            "GT_g" => needs_g(Catalog::GTg),
            _ => Err(BraidError::UnknownCatalog(name.to_string())),
        }
    }

    /// Genus of the catalog (0 for genus zero).
    pub fn genus(&self) -> usize {
        match self {
            Catalog::PaBf => 0,
            Catalog::PaB1 => 1,
            Catalog::PaBfG(g) | Catalog::PaBfGBis(g) | Catalog::LE1(g) | Catalog::GTg(g) => *g,
        }
    }

    /// True when the catalog lives in framed algebras.
    pub fn framed(&self) -> bool {
        !matches!(self, Catalog::PaB1)
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Catalog::PaBf => write!(f, "PaBf"),
            Catalog::PaBfG(g) => write!(f, "PaBf_g(g={g})"),
            Catalog::PaBfGBis(g) => write!(f, "PaBf_g_bis(g={g})"),
            Catalog::PaB1 => write!(f, "PaB_1"),
            Catalog::LE1(g) => write!(f, "LE1(g={g})"),
            Catalog::GTg(g) => write!(f, "GT_g(g={g})"),
        }
    }
}

/// A relation `lhs = rhs` between two morphisms with common endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPair {
    /// Relation family, e.g. `H1` or `E2g`.
    pub family: String,
    /// Instance name, e.g. `Dg[a=1,A]`.
    pub name: String,
    /// Left-hand side.
    pub lhs: BraidMorphism,
    /// Right-hand side.
    pub rhs: BraidMorphism,
}

impl RelationPair {
    fn new(family: &str, name: &str, source: &str, lhs: Vec<Letter>, rhs: Vec<Letter>) -> Result<Self, BraidError> {
        let src = super::object::PaObject::parse(source)?;
        let lhs = BraidMorphism::new(src.clone(), lhs)?;
        let rhs = BraidMorphism::new(src, rhs)?;
        if lhs.target() != rhs.target() {
            return Err(BraidError::Endpoint(format!("{name}: targets {} and {} differ", lhs.target(), rhs.target())));
        }
        Ok(RelationPair { family: family.to_string(), name: name.to_string(), lhs, rhs })
    }

    /// `evaluate(lhs) - evaluate(rhs)`.
    pub fn discrepancy<S: Scalar>(&self, ev: &Evaluator<'_, S>) -> Result<crate::envelope::Series<S>, BraidError> {
        Ok(ev.evaluate(&self.lhs)?.sub(&ev.evaluate(&self.rhs)?)?)
    }
}

impl fmt::Display for RelationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}  ({} -> {})", self.name, self.lhs, self.rhs, self.lhs.source(), self.lhs.target())
    }
}

/// A relation stored as text only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicRelation {
    /// Name.
    pub name: String,
    /// Left-hand side.
    pub lhs: String,
    /// Right-hand side.
    pub rhs: String,
    /// Group in which the identity holds.
    pub group: String,
}

impl fmt::Display for SymbolicRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}  in {}", self.name, self.lhs, self.rhs, self.group)
    }
}

/// Contents of a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntries {
    /// Evaluable relation pairs.
    Words(Vec<RelationPair>),
    /// Relations kept as symbolic data.
    Symbolic(Vec<SymbolicRelation>),
}

fn w(text: &str) -> Vec<Letter> {
    parse_word(text).expect("static word")
}

fn cat(parts: &[Vec<Letter>]) -> Vec<Letter> {
    parts.concat()
}

fn rep(word: &[Letter], k: usize) -> Vec<Letter> {
    (0..k).flat_map(|_| word.iter().cloned()).collect()
}

/// `Phi Z^{1,23} Phi^-1`.
fn conj_123(z: &str) -> Vec<Letter> {
    w(&format!("Phi^{{1,2,3}} {z}^{{1,23}} Phi^{{1,2,3}}!"))
}

/// `R^{1,2} Phi^{2,1,3} Z^{2,13} (Phi^{2,1,3})^-1 R^{2,1}`.
fn conj_213(z: &str) -> Vec<Letter> {
    w(&format!("R^{{1,2}} Phi^{{2,1,3}} {z}^{{2,13}} Phi^{{2,1,3}}! R^{{2,1}}"))
}

/// `Phi Z^{1,23} R^{1,23} Phi^{2,3,1} Z^{2,31} R^{2,31} Phi^{3,1,2} Z^{3,12} R^{3,12}`.
fn dodecagon(z: &str) -> Vec<Letter> {
    w(&format!(
        "Phi^{{1,2,3}} {z}^{{1,23}} R^{{1,23}} Phi^{{2,3,1}} {z}^{{2,31}} R^{{2,31}} \
         Phi^{{3,1,2}} {z}^{{3,12}} R^{{3,12}}"
    ))
}

fn handle_letters(g: usize, tilde: bool) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    for a in 1..=g {
        for z in ["A", "B"] {
            out.push((a, format!("{z}{}{a}", if tilde { "t" } else { "" })));
        }
    }
    out
}

fn pabf() -> Result<Vec<RelationPair>, BraidError> {
    Ok(vec![
        RelationPair::new("R1", "R1", "1", w("F^{0,1}"), vec![])?,
        RelationPair::new("R2", "R2[0,1,2]", "12", w("Phi^{0,1,2}"), vec![])?,
        RelationPair::new("R2", "R2[1,0,2]", "12", w("Phi^{1,0,2}"), vec![])?,
        RelationPair::new("R2", "R2[1,2,0]", "12", w("Phi^{1,2,0}"), vec![])?,
        RelationPair::new("F", "F", "12", w("F^{1,2} R^{1,2} F^{2,1} R^{2,1}"), w("F^{12,0}"))?,
        RelationPair::new(
            "H1",
            "H1",
            "(12)3",
            w("R^{1,2} Phi^{2,1,3} R^{1,3}"),
            w("Phi^{1,2,3} R^{1,23} Phi^{2,3,1}"),
        )?,
        RelationPair::new(
            "H2",
            "H2",
            "(12)3",
            w("Rt^{1,2} Phi^{2,1,3} Rt^{1,3}"),
            w("Phi^{1,2,3} Rt^{1,23} Phi^{2,3,1}"),
        )?,
        RelationPair::new(
            "P",
            "P",
            "((12)3)4",
            w("Phi^{12,3,4} Phi^{1,2,34}"),
            w("Phi^{1,2,3} Phi^{1,23,4} Phi^{2,3,4}"),
        )?,
    ])
}

fn twist_power(g: usize) -> Vec<Letter> {
    rep(&w("F^{1,2}"), 2 * (g - 1))
}

fn pabf_g(g: usize, framed: bool) -> Result<Vec<RelationPair>, BraidError> {
    let mut out = Vec::new();
    let letters = handle_letters(g, false);
    for (a, z) in &letters {
        out.push(RelationPair::new("Rg", &format!("Rg[a={a},{z}]"), "1", w(&format!("{z}^{{0,1}}")), vec![])?);
    }
    for (a, z) in &letters {
        out.push(RelationPair::new(
            "Dg",
            &format!("Dg[a={a},{z}]"),
            "(12)3",
            w(&format!("{z}^{{123,0}}")),
            dodecagon(z),
        )?);
    }
    for (a, za) in &letters {
        for (b, zb) in &letters {
            if a < b {
                out.push(RelationPair::new(
                    "Ng",
                    &format!("Ng[{za},{zb}]"),
                    "(12)3",
                    vec![],
                    commutator(&conj_123(zb), &conj_213(za)),
                )?);
            }
        }
    }
    for a in 1..=g {
        out.push(RelationPair::new(
            "E1g",
            &format!("E1g[a={a}]"),
            "(12)3",
            w("R^{1,2} R^{2,1}"),
            commutator(&conj_213(&format!("A{a}")), &conj_123(&format!("B{a}"))),
        )?);
    }
    let mut rhs = Vec::new();
    for a in 1..=g {
        rhs.extend(commutator(&w(&format!("A{a}^{{1,2}}!")), &w(&format!("B{a}^{{1,2}}"))));
    }
    let lhs = if framed { cat(&[w("R^{1,2} R^{2,1}"), twist_power(g)]) } else { w("R^{1,2} R^{2,1}") };
    out.push(RelationPair::new("E2g", "E2g", "12", lhs, rhs)?);
    Ok(out)
}

fn pabf_g_bis(g: usize) -> Result<Vec<RelationPair>, BraidError> {
    let mut out = Vec::new();
    let letters = handle_letters(g, true);
    for (a, z) in &letters {
        out.push(RelationPair::new("gRbis", &format!("gRbis[a={a},{z}]"), "1", w(&format!("{z}^{{1,0}}")), vec![])?);
    }
    for (a, z) in &letters {
        out.push(RelationPair::new(
            "gDbis",
            &format!("gDbis[a={a},{z}]"),
            "(12)3",
            w(&format!("{z}^{{0,123}} {z}^{{12,3}}")),
            w(&format!(
                "Phi^{{1,2,3}} {z}^{{1,23}} Phi^{{1,2,3}}! R^{{2,1}}! \
                 Phi^{{2,1,3}} {z}^{{2,13}} Phi^{{2,1,3}}! R^{{1,2}}!"
            )),
        )?);
    }
    for (a, za) in &letters {
        for (b, zb) in &letters {
            if a < b {
                let second =
                    w(&format!("{zb}^{{12,3}}! Phi^{{1,2,3}} {zb}^{{1,23}} R^{{2,3}} R^{{3,2}} Phi^{{1,2,3}}!"));
                out.push(RelationPair::new(
                    "gNbis",
                    &format!("gNbis[{za},{zb}]"),
                    "(12)3",
                    vec![],
                    commutator(&w(&format!("{za}^{{12,3}}")), &second),
                )?);
            }
        }
    }
    for a in 1..=g {
        let second = w(&format!("Bt{a}^{{12,3}} Phi^{{1,2,3}} Bt{a}^{{1,23}}! Phi^{{1,2,3}}!"));
        out.push(RelationPair::new(
            "gE1bis",
            &format!("gE1bis[a={a}]"),
            "(12)3",
            w("Phi^{1,2,3} R^{2,3} R^{3,2} Phi^{1,2,3}!"),
            commutator(&w(&format!("At{a}^{{12,3}}!")), &second),
        )?);
    }
    let mut rhs = Vec::new();
    for a in 1..=g {
        rhs.extend(commutator(&w(&format!("At{a}^{{1,2}}")), &w(&format!("Bt{a}^{{1,2}}!"))));
    }
    out.push(RelationPair::new("gE2bis", "gE2bis", "12", cat(&[w("R^{1,2} R^{2,1}"), twist_power(g)]), rhs)?);
    Ok(out)
}

fn pab_1() -> Result<Vec<RelationPair>, BraidError> {
    let mut out = vec![
        RelationPair::new("Pab1:0", "Pab1:0[A]", "1", w("A1^{0,1}"), vec![])?,
        RelationPair::new("Pab1:0", "Pab1:0[B]", "1", w("B1^{0,1}"), vec![])?,
    ];
    for (tag, z) in [("1", "A1"), ("2", "B1")] {
        out.push(RelationPair::new(
            &format!("Pab1:{tag}"),
            &format!("Pab1:{tag}"),
            "(12)3",
            dodecagon(z),
            w(&format!("{z}^{{123,0}}")),
        )?);
    }
    out.push(RelationPair::new(
        "Pab1:3",
        "Pab1:3",
        "(12)3",
        w("R^{1,2} R^{2,1}"),
        commutator(&conj_213("A1"), &conj_123("B1")),
    )?);
    out.push(RelationPair::new("Pab1:4", "Pab1:4", "12", w("R^{1,2} R^{2,1}"), w("(A1^{1,2}!, B1^{1,2})"))?);
    Ok(out)
}

fn le1(g: usize) -> Result<Vec<RelationPair>, BraidError> {
    let mut out = Vec::new();
    for (a, z) in handle_letters(g, false) {
        out.push(RelationPair::new(
            "Nbis",
            &format!("Nbis[a={a},{z}]"),
            "(12)3",
            w(&format!("{z}^{{12,3}}")),
            cat(&[conj_123(&z), conj_213(&z)]),
        )?);
    }
    Ok(out)
}

fn gt_g(g: usize) -> Vec<SymbolicRelation> {
    let group = |k: usize| format!("framed genus-{g} braid group on {k} strands");
    let mut out = Vec::new();
    let rel = |name: String, lhs: &str, rhs: &str, grp: String| SymbolicRelation {
        name,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        group: grp,
    };
    for a in 1..=g {
        out.push(rel(format!("GTg:0[a={a}]"), &format!("g_{a}^{{0,1}}"), "1", group(1)));
        out.push(rel(format!("GTg:0'[a={a}]"), &format!("h_{a}^{{0,1}}"), "1", group(1)));
        out.push(rel(
            format!("GTg:1[a={a}]"),
            &format!("(f(tau_1^2, tau_2^2) g_{a}^{{1,2}} (tau_1 tau_2^2 tau_1)^((lambda-1)/2) tau_2 tau_1)^3"),
            &format!("g_{a}^{{(12)3}}"),
            group(3),
        ));
        out.push(rel(
            format!("GTg:2[a={a}]"),
            &format!("(f(tau_1^2, tau_2^2) h_{a}^{{1,2}} (tau_1 tau_2^2 tau_1)^((lambda-1)/2) tau_2 tau_1)^3"),
            &format!("h_{a}^{{(12)3}}"),
            group(3),
        ));
        out.push(rel(format!("GTg:3[a={a}]"), "u^2", &format!("(u g_{a}^{{1,2}} u, h_{a}^{{1,2}})"), group(3)));
    }
    for a in 1..=g {
        for b in a + 1..=g {
            for (p, q) in [("g", "g"), ("g", "h"), ("h", "h"), ("h", "g")] {
                out.push(rel(
                    format!("GTg:N[{p}_{a},{q}_{b}]"),
                    "1",
                    &format!("({p}_{a}^{{1,2}}, u {q}_{b}^{{1,2}} u)"),
                    group(3),
                ));
            }
        }
    }
    let prod: Vec<String> = (1..=g).map(|a| format!("((g_{a}^{{1,2}})^-1, h_{a}^{{1,2}})")).collect();
    out.push(rel("GTg:4".to_string(), "tau_1^(2 lambda) f_1^(2 lambda (g-1))", &prod.join(" "), group(2)));
    out.push(rel("GTg:u".to_string(), "u", "f(tau_1^2, tau_2^2)^-1 tau_1^lambda f(tau_1^2, tau_2^2)", group(3)));
    out
}

/// The relations of a catalog.
pub fn relation_words(catalog: Catalog) -> Result<CatalogEntries, BraidError> {
    Ok(match catalog {
        Catalog::PaBf => CatalogEntries::Words(pabf()?),
        Catalog::PaBfG(g) => CatalogEntries::Words(pabf_g(g, true)?),
        Catalog::PaBfGBis(g) => CatalogEntries::Words(pabf_g_bis(g)?),
        Catalog::PaB1 => CatalogEntries::Words(pab_1()?),
        Catalog::LE1(g) => CatalogEntries::Words(le1(g)?),
        Catalog::GTg(g) => CatalogEntries::Symbolic(gt_g(g)),
    })
}

/// Evaluate every pair of a word catalog and collect `lhs - rhs` residuals.
pub fn check_relations<S: Scalar>(
    title: &str,
    pairs: &[RelationPair],
    ev: &Evaluator<'_, S>,
) -> Result<Report, BraidError> {
    let diffs: Vec<_> = pairs.par_iter().map(|p| p.discrepancy(ev)).collect::<Result<_, _>>()?;
    let mut report = Report::new(title).param("N", ev.truncation());
    for (p, d) in pairs.iter().zip(&diffs) {
        report.push(&p.name, d);
    }
    Ok(report)
}
