//! Subcommand implementations.

use crate::config::{pick, FileConfig};
use crate::output::Outcome;
use crate::{AssocArgs, Cli, Command, FamilyArgs};
use assoc_core::braid::{
    check_relations, relation_words, BraidMorphism, Catalog, CatalogEntries, Evaluator, RelationPair,
};
use assoc_core::cabling::cable_defects;
use assoc_core::equations::{
    check_associator, check_elliptic, check_flatness, check_genus, check_grt, check_grtg, check_gt, random_group_like,
    random_lambda, solve_associator, solve_elliptic, solve_genus, transport_to_bis, AssociatorCandidate, EllipticForm,
    EquationError, FlatnessProblem, GenusData, GenusOutcome, GrtElement, GrtgElement, GtElement, Report, WeightStep,
};
use assoc_core::kz::kz_transport;
use assoc_core::lie::{algebra, c3, check_hom, Family, GradedQuotient, LiePoly};
use assoc_core::{cable, Envelope, Rat, Series, StrandAssignment};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

type CmdResult = Result<Outcome, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Dispatch the parsed command line and emit the report.
pub fn run(cli: &Cli) -> Result<ExitCode, String> {
    execute(cli)?.emit(cli.json, cli.out.as_deref())
}

/// Run the parsed command line and return its report without emitting it.
pub fn execute(cli: &Cli) -> CmdResult {
    let cfg = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let outcome = match &cli.command {
        Command::Dims { family, max_weight } => dims(&cfg, family, *max_weight)?,
        Command::Central { family, element, max_weight } => central(&cfg, family, element, *max_weight)?,
        Command::HomCheck { src, tgt, images, max_weight } => {
            hom_check(&cfg, src, tgt, images.as_deref(), *max_weight)?
        }
        Command::Cable { src, tgt, pattern, element, max_weight } => {
            cable_cmd(&cfg, src, tgt, pattern, element, *max_weight)?
        }
        Command::Relations { catalog, g, check, assoc } => relations(&cfg, catalog, *g, *check, assoc)?,
        Command::CheckAssoc { assoc } => check_assoc(&cfg, assoc)?,
        Command::SolveAssoc { assoc } => solve_assoc(&cfg, assoc)?,
        Command::CheckGenus { assoc, g, data } => check_genus_cmd(&cfg, assoc, *g, data.as_deref())?,
        Command::SolveGenus { assoc, g } => solve_genus_cmd(&cfg, assoc, *g)?,
        Command::CheckElliptic { assoc, data, form } => check_elliptic_cmd(&cfg, assoc, data.as_deref(), form)?,
        Command::CheckGrt { element, lambda, truncation, random, seed, genus } => {
            check_grt_cmd(&cfg, element.as_deref(), lambda, *truncation, *random, *seed, *genus)?
        }
        Command::CheckGt { element, lambda, assoc, random, seed } => {
            check_gt_cmd(&cfg, element.as_deref(), lambda, assoc, *random, *seed)?
        }
        Command::Flatness { n, framed, drop_four_term } => flatness(&cfg, *n, *framed, *drop_four_term)?,
        Command::KzTransport { weight, prec_bits, tol } => kz(&cfg, *weight, *prec_bits, *tol)?,
        Command::BraidEval { source, word, assoc, unframed, g } => {
            braid_eval(&cfg, source, word, assoc, *unframed, *g)?
        }
    };
    Ok(outcome)
}

// ---------------------------------------------------------------- parsing

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|_| format!("not a rational number: '{s}'"))
}

fn family_of(kind: &str, n: Option<usize>, g: Option<usize>) -> Result<Family, String> {
    let need_n = || n.ok_or_else(|| format!("family {kind} needs --n"));
    let need_g = || g.ok_or_else(|| format!("family {kind} needs --g"));
    Ok(match kind {
        "t" => Family::T { n: need_n()? },
        "tf" => Family::TF { n: need_n()? },
        "tf-alt" => Family::TFAlt { n: need_n()? },
        "tg" => Family::TG { g: need_g()?, n: need_n()? },
        "tfg" => Family::TFG { g: need_g()?, n: need_n()? },
        "t1bar" => Family::T1Bar { n: need_n()? },
        "f2" => Family::FreeF2,
        "fg" => Family::FreeFG { g: need_g()? },
        other => return Err(format!("unknown family '{other}'")),
    })
}

/// `kind[:g]:n` for genus families, `kind:n` otherwise, `f2`, `fg:g`.
fn parse_family(desc: &str) -> Result<Family, String> {
    let parts: Vec<&str> = desc.split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| format!("bad family description '{desc}'"));
    match (parts[0], parts.len()) {
        ("f2", 1) => Ok(Family::FreeF2),
        ("fg", 2) => family_of("fg", None, Some(num(parts[1])?)),
        ("tg" | "tfg", 3) => family_of(parts[0], Some(num(parts[2])?), Some(num(parts[1])?)),
        (k, 2) => family_of(k, Some(num(parts[1])?), None),
        _ => Err(format!("bad family description '{desc}'")),
    }
}

fn family_args(cfg: &FileConfig, f: &FamilyArgs) -> Result<Family, String> {
    family_of(&f.family, f.n.or(cfg.n), f.g.or(cfg.g))
}

fn element(q: &GradedQuotient, desc: &str) -> Result<LiePoly<Rat>, String> {
    if desc == "c3" {
        if q.family() != &(Family::T { n: 3 }) && q.family() != &(Family::TF { n: 3 }) {
            return Err("c3 is defined on three strands".into());
        }
        return Ok(c3(q));
    }
    if let Some(path) = desc.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        return LiePoly::parse(q.alphabet(), &text).map_err(err);
    }
    let l = q.alphabet().letter_by_name(desc).ok_or_else(|| format!("no generator '{desc}' in {}", q.family()))?;
    Ok(LiePoly::generator(q.alphabet(), l))
}

fn read_text(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn header_truncation(text: &str) -> Result<u32, String> {
    text.lines()
        .find(|l| !l.trim().is_empty())
        .and_then(|h| h.split_whitespace().find_map(|t| t.strip_prefix("N=")))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| "series file lacks an N= header".to_string())
}

fn read_free_series(path: &Path) -> Result<Series<Rat>, String> {
    let text = read_text(path)?;
    let n = header_truncation(&text)?;
    let env = Envelope::of(&Family::FreeF2, n).map_err(err)?;
    Series::parse(&env, &text).map_err(err)
}

fn mu_of(cfg: &FileConfig, a: &AssocArgs) -> Result<Rat, String> {
    parse_rat(&pick(a.mu.clone(), cfg.mu.clone(), "1".to_string()))
}

fn truncation_of(cfg: &FileConfig, a: Option<u32>, default: u32) -> Result<u32, String> {
    let n = pick(a, cfg.truncation, default);
    if n == 0 {
        return Err("N must be at least 1".into());
    }
    Ok(n)
}

/// The associator from `--phi`, or solved from `mu` through weight `n`.
fn associator(cfg: &FileConfig, a: &AssocArgs, n: u32) -> Result<AssociatorCandidate<Rat>, String> {
    let mu = mu_of(cfg, a)?;
    match &a.phi {
        Some(path) => {
            let phi = read_free_series(path)?;
            if phi.truncation() < n {
                return Err(format!("phi is known through weight {} but {n} is needed", phi.truncation()));
            }
            let c = AssociatorCandidate::new(mu, phi).map_err(err)?;
            c.truncate(n).map_err(err)
        }
        None => Ok(solve_associator(&mu, n).map_err(err)?.0),
    }
}

fn report_outcome(r: &Report) -> Outcome {
    Outcome { text: r.render(), json: json!(r), ok: r.is_zero() }
}

fn steps_json(steps: &[WeightStep]) -> Value {
    json!(steps)
}

fn steps_text(steps: &[WeightStep]) -> String {
    steps
        .iter()
        .map(|s| {
            format!(
                "# weight {}: unknowns={} equations={} rank={} free=[{}]\n",
                s.weight,
                s.unknowns,
                s.equations,
                s.rank,
                s.free.join(",")
            )
        })
        .collect()
}

// ---------------------------------------------------------------- algebra

fn dims(cfg: &FileConfig, f: &FamilyArgs, max_weight: Option<u32>) -> CmdResult {
    let family = family_args(cfg, f)?;
    let max = pick(max_weight, cfg.max_weight, 4);
    let q = algebra(&family, max).map_err(err)?;
    let dims = q.dims(max).map_err(err)?;
    Ok(Outcome {
        text: q.dimension_table(max).map_err(err)?,
        json: json!({ "family": family.to_string(), "max_weight": max, "dims": dims }),
        ok: true,
    })
}

fn central(cfg: &FileConfig, f: &FamilyArgs, desc: &str, max_weight: Option<u32>) -> CmdResult {
    let family = family_args(cfg, f)?;
    let max = pick(max_weight, cfg.max_weight, 4);
    let q = algebra(&family, max).map_err(err)?;
    let a = element(&q, desc)?;
    let central = q.is_central(&a, max).map_err(err)?;
    Ok(Outcome {
        text: format!("central {desc} in {family} through weight {max}: {}\n", if central { "yes" } else { "no" }),
        json: json!({ "family": family.to_string(), "element": desc, "max_weight": max, "central": central }),
        ok: central,
    })
}

fn parse_images(
    src: &GradedQuotient,
    tgt: &Arc<GradedQuotient>,
    path: Option<&Path>,
) -> Result<Vec<LiePoly<Rat>>, String> {
    let sa = src.alphabet();
    let ta = tgt.alphabet();
    let mut images: Vec<LiePoly<Rat>> = sa
        .generators()
        .iter()
        .map(|s| match (path, ta.letter_by_name(&s.name)) {
            (None, Some(l)) => LiePoly::generator(ta, l),
            _ => LiePoly::zero(ta),
        })
        .collect();
    if let Some(path) = path {
        let text = read_text(path)?;
        let mut blocks: Vec<(String, String)> = Vec::new();
        for line in text.lines() {
            if let Some(name) = line.strip_prefix("## ") {
                blocks.push((name.trim().to_string(), String::new()));
            } else if let Some((_, body)) = blocks.last_mut() {
                body.push_str(line);
                body.push('\n');
            }
        }
        for (name, body) in blocks {
            let l = sa.letter_by_name(&name).ok_or_else(|| format!("no source generator '{name}'"))?;
            images[l as usize] = LiePoly::parse(ta, &body).map_err(err)?;
        }
    }
    Ok(images)
}

fn hom_check(cfg: &FileConfig, src: &str, tgt: &str, images: Option<&Path>, max_weight: Option<u32>) -> CmdResult {
    let (sf, tf) = (parse_family(src)?, parse_family(tgt)?);
    let max = pick(max_weight, cfg.max_weight, 4);
    let s = algebra(&sf, max).map_err(err)?;
    let t = algebra(&tf, max).map_err(err)?;
    let ims = parse_images(&s, &t, images)?;
    let mut text = format!("# hom-check {sf} -> {tf} max_weight={max}\n");
    for (sym, im) in s.alphabet().generators().iter().zip(&ims) {
        let rendered: Vec<String> = im.serialize().lines().map(str::to_string).collect();
        text.push_str(&format!(
            "{} -> {}\n",
            sym.name,
            if rendered.is_empty() { "0".into() } else { rendered.join(" + ") }
        ));
    }
    let ok = check_hom(&s, &t, ims, max).map_err(err)?;
    text.push_str(if ok { "morphism: yes\n" } else { "morphism: no\n" });
    Ok(Outcome {
        text,
        json: json!({ "src": sf.to_string(), "tgt": tf.to_string(), "max_weight": max, "morphism": ok }),
        ok,
    })
}

fn cable_cmd(cfg: &FileConfig, src: &str, tgt: &str, pattern: &str, desc: &str, max_weight: Option<u32>) -> CmdResult {
    let (sf, tf) = (parse_family(src)?, parse_family(tgt)?);
    let max = pick(max_weight, cfg.max_weight, 4);
    let s = algebra(&sf, max).map_err(err)?;
    let a = element(&s, desc)?;
    let asg = StrandAssignment::parse(pattern, Some(tf.n())).map_err(err)?;
    let image = cable(&a, &sf, &tf, max, &asg).map_err(err)?;
    let defects = cable_defects(&sf, &tf, max, &asg).map_err(err)?;
    let mut text = format!("# cable {sf} -> {tf} pattern={pattern} N={max}\n{}", image.serialize());
    text.push_str(&format!("# relation defects: {}\n", defects.len()));
    for d in &defects {
        for line in d.serialize().lines() {
            text.push_str(&format!("#   {line}\n"));
        }
    }
    let image_terms: Vec<(String, String)> = image
        .serialize()
        .lines()
        .filter_map(|l| l.split_once(' ').map(|(w, c)| (w.to_string(), c.to_string())))
        .collect();
    Ok(Outcome {
        text,
        json: json!({
            "src": sf.to_string(), "tgt": tf.to_string(), "pattern": pattern, "N": max,
            "image": image_terms,
            "defects": defects.iter().map(|d| d.serialize()).collect::<Vec<_>>(),
        }),
        ok: defects.is_empty(),
    })
}

// ---------------------------------------------------------------- braids

fn genus_data(c: &AssociatorCandidate<Rat>, g: usize, n: u32, framed: bool) -> Result<GenusData<Rat>, String> {
    let outcome = if framed { solve_genus(c, g, n) } else { solve_elliptic(c, n) }.map_err(err)?;
    match outcome {
        GenusOutcome::Solved { data, .. } => Ok(data),
        GenusOutcome::Obstructed(o) => Err(format!("genus data obstructed: {}", o.render())),
    }
}

fn pair_json(p: &RelationPair) -> Value {
    json!({
        "family": p.family, "name": p.name,
        "source": p.lhs.source().to_string(), "target": p.lhs.target().to_string(),
        "lhs": p.lhs.to_string(), "rhs": p.rhs.to_string(),
    })
}

fn relations(cfg: &FileConfig, name: &str, g: Option<usize>, check: bool, a: &AssocArgs) -> CmdResult {
    let g = g.or(cfg.g).unwrap_or(0);
    let catalog = Catalog::parse(name, g).map_err(err)?;
    let entries = relation_words(catalog).map_err(err)?;
    let pairs = match entries {
        CatalogEntries::Symbolic(rels) => {
            if check {
                return Err(format!("catalog {name} is symbolic and cannot be evaluated"));
            }
            let text: String = rels.iter().map(|r| format!("{r}\n")).collect();
            return Ok(Outcome { text, json: json!({ "catalog": catalog.to_string(), "symbolic": rels }), ok: true });
        }
        CatalogEntries::Words(pairs) => pairs,
    };
    let mut text: String = pairs.iter().map(|p| format!("{p}\n")).collect();
    let listing: Vec<Value> = pairs.iter().map(pair_json).collect();
    if !check {
        return Ok(Outcome { text, json: json!({ "catalog": catalog.to_string(), "relations": listing }), ok: true });
    }
    let n = truncation_of(cfg, a.truncation, 3)?;
    let report = if catalog.genus() == 0 {
        let c = associator(cfg, a, n)?;
        let ev = Evaluator::new(&c, catalog.framed(), n).map_err(err)?;
        check_relations(&catalog.to_string(), &pairs, &ev).map_err(err)?
    } else {
        let c = associator(cfg, a, n.div_ceil(2))?;
        let data = genus_data(&c, catalog.genus(), n, catalog.framed())?;
        let ev = Evaluator::with_genus(&c, &data).map_err(err)?;
        check_relations(&catalog.to_string(), &pairs, &ev).map_err(err)?
    };
    text.push_str(&report.render());
    Ok(Outcome {
        text,
        json: json!({ "catalog": catalog.to_string(), "relations": listing, "report": report }),
        ok: report.is_zero(),
    })
}

fn braid_eval(
    cfg: &FileConfig,
    source: &str,
    word: &str,
    a: &AssocArgs,
    unframed: bool,
    g: Option<usize>,
) -> CmdResult {
    let w = BraidMorphism::parse(source, word).map_err(err)?;
    let n = truncation_of(cfg, a.truncation, 3)?;
    let value = match g.or(cfg.g) {
        None | Some(0) => {
            let c = associator(cfg, a, n)?;
            let ev = Evaluator::new(&c, !unframed, n).map_err(err)?;
            ev.evaluate(&w).map_err(err)?
        }
        Some(g) => {
            let c = associator(cfg, a, n.div_ceil(2))?;
            let data = genus_data(&c, g, n, !unframed)?;
            let ev = Evaluator::with_genus(&c, &data).map_err(err)?;
            ev.evaluate(&w).map_err(err)?
        }
    };
    let text = format!("# {} -> {}\n{}", w.source(), w.target(), value.serialize());
    Ok(Outcome {
        text,
        json: json!({
            "source": w.source().to_string(), "target": w.target().to_string(), "word": w.to_string(),
            "series": value.serialize(),
        }),
        ok: true,
    })
}

// ---------------------------------------------------------------- equations

fn check_assoc(cfg: &FileConfig, a: &AssocArgs) -> CmdResult {
    let c = match &a.phi {
        Some(path) => {
            let phi = read_free_series(path)?;
            let n = truncation_of(cfg, a.truncation, phi.truncation())?.min(phi.truncation());
            AssociatorCandidate::new(mu_of(cfg, a)?, phi).map_err(err)?.truncate(n).map_err(err)?
        }
        None => associator(cfg, a, truncation_of(cfg, a.truncation, 3)?)?,
    };
    Ok(report_outcome(&check_associator(&c).map_err(err)?))
}

fn solve_assoc(cfg: &FileConfig, a: &AssocArgs) -> CmdResult {
    let mu = mu_of(cfg, a)?;
    let n = truncation_of(cfg, a.truncation, 3)?;
    match solve_associator(&mu, n) {
        Ok((c, steps)) => {
            let log = c.phi.log().map_err(err)?;
            let mut text = c.phi.serialize();
            for line in log.serialize().lines() {
                text.push_str(&format!("# log {line}\n"));
            }
            text.push_str(&steps_text(&steps));
            Ok(Outcome {
                text,
                json: json!({
                    "mu": assoc_core::scalar::render_rat(&mu), "N": n,
                    "series": c.phi.serialize(), "log": log.serialize(), "steps": steps_json(&steps),
                }),
                ok: true,
            })
        }
        Err(EquationError::Obstruction(o)) => {
            Ok(Outcome { text: o.render(), json: json!({ "obstruction": o }), ok: false })
        }
        Err(e) => Err(err(e)),
    }
}

fn check_genus_cmd(cfg: &FileConfig, a: &AssocArgs, g: Option<usize>, data: Option<&Path>) -> CmdResult {
    let g = pick(g, cfg.g, 1);
    let (c, d) = match data {
        Some(path) => {
            let d = GenusData::parse(&read_text(path)?, g, true).map_err(err)?;
            (associator(cfg, a, d.truncation().div_ceil(2))?, d)
        }
        None => {
            let n = truncation_of(cfg, a.truncation, 3)?;
            let c = associator(cfg, a, n.div_ceil(2))?;
            let d = genus_data(&c, g, n, true)?;
            (c, d)
        }
    };
    Ok(report_outcome(&check_genus(&c, &d).map_err(err)?))
}

fn solve_genus_cmd(cfg: &FileConfig, a: &AssocArgs, g: Option<usize>) -> CmdResult {
    let g = pick(g, cfg.g, 1);
    let n = truncation_of(cfg, a.truncation, 3)?;
    let c = associator(cfg, a, n.div_ceil(2))?;
    match solve_genus(&c, g, n).map_err(err)? {
        GenusOutcome::Solved { data, steps } => {
            let report = check_genus(&c, &data).map_err(err)?;
            let mut text = data.serialize();
            text.push_str(&steps_text(&steps));
            let ok = report.is_zero();
            if !ok {
                text.push_str(&report.render());
            }
            Ok(Outcome {
                text,
                json: json!({ "g": g, "N": n, "data": data.serialize(), "steps": steps_json(&steps), "report": report }),
                ok,
            })
        }
        GenusOutcome::Obstructed(o) => {
            Ok(Outcome { text: o.render(), json: json!({ "g": g, "N": n, "obstruction": o }), ok: false })
        }
    }
}

fn check_elliptic_cmd(cfg: &FileConfig, a: &AssocArgs, data: Option<&Path>, form: &str) -> CmdResult {
    let form = match form {
        "standard" => EllipticForm::Standard,
        "bis" => EllipticForm::Bis,
        other => return Err(format!("unknown form '{other}' (standard or bis)")),
    };
    let (c, d) = match data {
        Some(path) => {
            let d = GenusData::parse(&read_text(path)?, 1, false).map_err(err)?;
            (associator(cfg, a, d.truncation().div_ceil(2))?, d)
        }
        None => {
            let n = truncation_of(cfg, a.truncation, 3)?;
            let c = associator(cfg, a, n.div_ceil(2))?;
            let d = genus_data(&c, 1, n, false)?;
            (c, d)
        }
    };
    let (plus, minus) = match form {
        EllipticForm::Standard => (d.plus[0].clone(), d.minus[0].clone()),
        EllipticForm::Bis => {
            (transport_to_bis(&c.mu, &d.plus[0]).map_err(err)?, transport_to_bis(&c.mu, &d.minus[0]).map_err(err)?)
        }
    };
    Ok(report_outcome(&check_elliptic(&c, &plus, &minus, form).map_err(err)?))
}

// ---------------------------------------------------------------- groups

struct LawCheck {
    lines: Vec<String>,
    ok: bool,
}

impl LawCheck {
    fn new() -> Self {
        LawCheck { lines: Vec::new(), ok: true }
    }

    fn record(&mut self, label: String, holds: bool) {
        self.ok &= holds;
        self.lines.push(format!("{label}: {}", if holds { "ok" } else { "FAIL" }));
    }
}

fn check_grt_cmd(
    cfg: &FileConfig,
    path: Option<&Path>,
    lambda: &str,
    truncation: Option<u32>,
    random: usize,
    seed: Option<u64>,
    genus: Option<usize>,
) -> CmdResult {
    let n = truncation_of(cfg, truncation, 4)?;
    if let Some(g) = genus {
        let e = GrtgElement::identity(g, n).map_err(err)?;
        return Ok(report_outcome(&check_grtg(&e).map_err(err)?));
    }
    let lambda = parse_rat(lambda)?;
    let e = match path {
        Some(p) => GrtElement::new(lambda, read_free_series(p)?).map_err(err)?,
        None => {
            let id = GrtElement::identity(n).map_err(err)?;
            GrtElement::new(lambda, id.g).map_err(err)?
        }
    };
    let report = check_grt(&e).map_err(err)?;
    let mut law = LawCheck::new();
    if random > 0 {
        let seed = pick(seed, cfg.seed, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = e.truncation();
        let id = GrtElement::identity(m).map_err(err)?;
        let elems: Vec<GrtElement> = (0..random)
            .map(|_| {
                let l = random_lambda(&mut rng);
                GrtElement::new(l, random_group_like(&mut rng, m)?)
            })
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for k in 0..random {
            let (a, b, c) = (&elems[k], &elems[(k + 1) % random], &elems[(k + 3) % random]);
            let lhs = a.mul(b).and_then(|ab| ab.mul(c)).map_err(err)?;
            let rhs = b.mul(c).and_then(|bc| a.mul(&bc)).map_err(err)?;
            law.record(format!("associativity[{k}]"), lhs == rhs);
            let unit = id.mul(a).map_err(err)? == *a && a.mul(&id).map_err(err)? == *a;
            law.record(format!("unit[{k}]"), unit);
            let r = e.rescaled(&random_lambda(&mut rng)).map_err(err)?;
            let status = check_grt(&r).map_err(err)?.is_zero();
            law.record(format!("rescaling[{k}]"), status == report.is_zero());
        }
    }
    let mut text = report.render();
    for l in &law.lines {
        text.push_str(&format!("{l}\n"));
    }
    Ok(Outcome { text, json: json!({ "report": report, "group_law": law.lines }), ok: report.is_zero() && law.ok })
}

fn check_gt_cmd(
    cfg: &FileConfig,
    path: Option<&Path>,
    lambda: &str,
    a: &AssocArgs,
    random: usize,
    seed: Option<u64>,
) -> CmdResult {
    let lambda = parse_rat(lambda)?;
    let e = match path {
        Some(p) => GtElement::new(lambda, read_free_series(p)?).map_err(err)?,
        None => {
            let n = truncation_of(cfg, a.truncation, 3)?;
            GtElement::new(lambda, GtElement::identity(n).map_err(err)?.f).map_err(err)?
        }
    };
    let c = associator(cfg, a, e.truncation())?;
    let report = check_gt(&e, &c).map_err(err)?;
    let mut law = LawCheck::new();
    if random > 0 {
        let seed = pick(seed, cfg.seed, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = e.truncation();
        let id = GtElement::identity(m).map_err(err)?;
        let elems: Vec<GtElement> = (0..random)
            .map(|_| {
                let l = random_lambda(&mut rng);
                GtElement::new(l, random_group_like(&mut rng, m)?)
            })
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for k in 0..random {
            let (x, y, z) = (&elems[k], &elems[(k + 1) % random], &elems[(k + 3) % random]);
            let lhs = x.mul(y).and_then(|xy| xy.mul(z)).map_err(err)?;
            let rhs = y.mul(z).and_then(|yz| x.mul(&yz)).map_err(err)?;
            law.record(format!("associativity[{k}]"), lhs == rhs);
            let unit = id.mul(x).map_err(err)? == *x && x.mul(&id).map_err(err)? == *x;
            law.record(format!("unit[{k}]"), unit && id.lambda == Rat::one());
        }
    }
    let mut text = report.render();
    for l in &law.lines {
        text.push_str(&format!("{l}\n"));
    }
    Ok(Outcome { text, json: json!({ "report": report, "group_law": law.lines }), ok: report.is_zero() && law.ok })
}

// ---------------------------------------------------------------- flatness and numerics

fn flatness(cfg: &FileConfig, n: Option<usize>, framed: bool, drop: bool) -> CmdResult {
    let n = pick(n, cfg.n, 3);
    let mut p = FlatnessProblem::new(n, framed);
    if drop {
        p = p.without_four_term();
    }
    let r = check_flatness(&p).map_err(err)?;
    Ok(Outcome { text: r.render(), json: json!(r), ok: r.flat })
}

fn kz(cfg: &FileConfig, weight: Option<u32>, prec: Option<u32>, tol: Option<f64>) -> CmdResult {
    let n = pick(weight, cfg.truncation, 4);
    let prec = pick(prec, cfg.prec_bits, 256);
    let tol = pick(tol, cfg.tol, 1e-8);
    let r = kz_transport(n, prec, tol).map_err(err)?;
    Ok(Outcome { text: r.render(), json: json!(r), ok: r.passes() })
}
