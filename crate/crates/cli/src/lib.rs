//! Request handling for the `braidcent` command line tool.
//!
//! Every verb produces a JSON report (`"schema": 1`); the plain text output is
//! rendered from the same report.

use braidcent::centralizer::{bound_p, centralizer_gens};
use braidcent::classify::{classify, NTClass};
use braidcent::curves::is_invariant;
use braidcent::garside::Dual;
use braidcent::sss::{are_conjugate, super_summit_set_in};
use braidcent::tubular::{decompose, to_regular_form};
use braidcent::{bkl_normal_form, commutes, nf_equal, normal_form, BraidError, BraidWord, Limits};
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    /// A cap was hit; the report holds whatever was certified.
    Budget,
    Input,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Budget => 2,
            Status::Input => 1,
        }
    }

    /// Input errors dominate budget exhaustion across a batch.
    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Nf,
    BklNf,
    Equal,
    Conj,
    Sss,
    Classify,
    Reduce,
    RegularForm,
    Centralizer,
    Bound,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::Nf => "nf",
            Verb::BklNf => "bkl-nf",
            Verb::Equal => "equal",
            Verb::Conj => "conj",
            Verb::Sss => "sss",
            Verb::Classify => "classify",
            Verb::Reduce => "reduce",
            Verb::RegularForm => "regular-form",
            Verb::Centralizer => "centralizer",
            Verb::Bound => "bound",
        }
    }

    /// Number of positional inputs.
    pub fn arity(self) -> usize {
        match self {
            Verb::Equal | Verb::Conj => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub limits: Limits,
    pub dual: bool,
}

pub struct Report {
    pub status: Status,
    pub json: Value,
}

fn status_of(e: &BraidError) -> Status {
    if e.is_budget() { Status::Budget } else { Status::Input }
}

fn error_json(e: &BraidError) -> Value {
    let mut v = json!({ "message": e.to_string() });
    if let BraidError::Parse { pos, .. } = e {
        v["column"] = json!(pos);
    }
    if let BraidError::BudgetExceeded { what, cap } = e {
        v["budget"] = json!({ "what": what, "cap": cap });
    }
    v
}

/// Runs one request. `inputs` holds `verb.arity()` strings.
pub fn run(verb: Verb, inputs: &[String], opts: &Options) -> Report {
    let base = json!({ "schema": SCHEMA, "verb": verb.name(), "input": inputs });
    let (status, body) = match execute(verb, inputs, opts) {
        Ok((status, result)) => (status, json!({ "result": result })),
        Err(e) => (status_of(&e), json!({ "error": error_json(&e) })),
    };
    let mut json = base;
    for (k, v) in body.as_object().unwrap() {
        json[k] = v.clone();
    }
    json["status"] = json!(match status {
        Status::Ok => "ok",
        Status::Budget => "budget",
        Status::Input => "error",
    });
    Report { status, json }
}

fn parse(s: &str) -> braidcent::Result<BraidWord> {
    BraidWord::parse(s)
}

fn execute(verb: Verb, inputs: &[String], opts: &Options) -> braidcent::Result<(Status, Value)> {
    if inputs.len() != verb.arity() {
        return Err(BraidError::Parse { pos: 0, msg: format!("{} expects {} input(s)", verb.name(), verb.arity()) });
    }
    let lim = &opts.limits;
    if verb == Verb::Bound {
        let n: usize = inputs[0]
            .trim()
            .parse()
            .map_err(|_| BraidError::Parse { pos: 0, msg: "expected a strand count".into() })?;
        return Ok((Status::Ok, json!({ "n": n, "bound": bound_p(n) })));
    }
    let w = parse(&inputs[0])?;
    let ok = |v: Value| Ok((Status::Ok, v));
    match verb {
        Verb::Nf => {
            let nf = normal_form(&w);
            let word = nf.to_word();
            ok(json!({ "normal_form": nf, "word": word, "certificate": { "nf_equal": nf_equal(&word, &w)? } }))
        }
        Verb::BklNf => {
            let nf = bkl_normal_form(&w);
            let word = nf.to_word();
            ok(json!({ "normal_form": nf, "word": word, "certificate": { "nf_equal": nf_equal(&word, &w)? } }))
        }
        Verb::Equal => {
            let v = parse(&inputs[1])?;
            ok(json!({ "equal": nf_equal(&w, &v)? }))
        }
        Verb::Conj => {
            let v = parse(&inputs[1])?;
            w.check_same(&v)?;
            match are_conjugate(&w, &v, lim)? {
                Some(c) => {
                    let verified = nf_equal(&w.conjugate_by(&c), &v)?;
                    ok(json!({ "conjugate": true, "conjugator": c, "certificate": { "conjugates_first_to_second": verified } }))
                }
                None => ok(json!({ "conjugate": false, "conjugator": null })),
            }
        }
        Verb::Sss => {
            if opts.dual {
                sss_json(super_summit_set_in(Dual::new(w.n()), &w, lim)?, "dual", &w)
            } else {
                sss_json(super_summit_set_in(braidcent::garside::Artin::new(w.n()), &w, lim)?, "classical", &w)
            }
        }
        Verb::Classify => {
            let c = classify(&w, lim)?;
            let cert = match &c {
                NTClass::Periodic { kind, k, conjugator } => {
                    let rep = kind.representative(w.n(), *k)?;
                    json!({ "conjugates_to_representative": nf_equal(&w.conjugate_by(conjugator), &rep)? })
                }
                NTClass::Reducible { reduction, rounding_conjugator, .. } => {
                    json!({ "system_invariant": is_invariant(&w.conjugate_by(rounding_conjugator), reduction)? })
                }
                NTClass::PseudoAnosov => json!({}),
            };
            ok(json!({ "classification": c, "certificate": cert }))
        }
        Verb::Reduce | Verb::RegularForm => {
            let NTClass::Reducible { reduction, rounding_conjugator, crs_exact } = classify(&w, lim)? else {
                return Err(BraidError::NotApplicable("braid is not reducible".into()));
            };
            let d = decompose(&w, &reduction, &rounding_conjugator)?;
            if verb == Verb::Reduce {
                ok(json!({ "decomposition": d, "crs_exact": crs_exact }))
            } else {
                let rf = to_regular_form(&d, lim)?;
                let verified = nf_equal(&w.conjugate_by(&rounding_conjugator).conjugate_by(&rf.conjugator), &rf.braid()?)?;
                ok(json!({ "regular_form": rf, "crs_exact": crs_exact, "certificate": { "conjugates_to_regular": verified } }))
            }
        }
        Verb::Centralizer => {
            let g = centralizer_gens(&w, lim)?;
            let mut gens = Vec::new();
            for x in &g.gens {
                let cert = if commutes(&x.word, &w)? { "commutes" } else { "FAILED" };
                gens.push(json!({ "word": x.word, "tag": x.tag, "certificate": cert }));
            }
            let status = if g.exhausted { Status::Budget } else { Status::Ok };
            Ok((
                status,
                json!({
                    "count": g.len(),
                    "bound": g.bound,
                    "within_bound": g.within_bound(),
                    "complete": g.complete,
                    "exhausted": g.exhausted,
                    "generators": gens,
                }),
            ))
        }
        Verb::Bound => unreachable!(),
    }
}

fn sss_json<G: braidcent::garside::GarsideStructure>(
    s: braidcent::sss::SuperSummitSet<G>,
    structure: &str,
    w: &BraidWord,
) -> braidcent::Result<(Status, Value)> {
    let mut elements = Vec::new();
    for e in &s.elements {
        let nf = e.nf.to_word();
        let c = e.conjugator_word().free_reduce();
        if !nf_equal(&w.conjugate_by(&c), &nf)? {
            return Err(BraidError::NotConsistent);
        }
        elements.push(json!({ "word": nf, "conjugator": c }));
    }
    Ok((
        Status::Ok,
        json!({
            "structure": structure,
            "size": s.len(),
            "inf": s.inf(),
            "canonical_length": s.canonical_length(),
            "elements": elements,
            "certificate": { "conjugators_verified": true },
        }),
    ))
}

fn curves(v: &Value) -> String {
    let iv: Vec<String> = v.as_array().into_iter().flatten().map(|p| format!("[{},{}]", p[0], p[1])).collect();
    format!("{{{}}}", iv.join(","))
}

/// Plain text rendering of a report.
pub fn render(r: &Value) -> String {
    if let Some(e) = r.get("error") {
        return format!("error: {}", e["message"].as_str().unwrap_or_default());
    }
    let x = &r["result"];
    let s = |v: &Value| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string());
    match r["verb"].as_str().unwrap_or_default() {
        "nf" | "bkl-nf" => format!("{}\n{}", s(&x["word"]), x["normal_form"]),
        "equal" => s(&x["equal"]),
        "conj" => match x["conjugator"].as_str() {
            Some(c) => format!("conjugate, by {c}"),
            None => "not conjugate".into(),
        },
        "sss" => {
            let mut out = format!(
                "{} super summit set: {} elements, inf {}, length {}",
                s(&x["structure"]),
                x["size"],
                x["inf"],
                x["canonical_length"]
            );
            for e in x["elements"].as_array().into_iter().flatten() {
                out.push_str(&format!("\n{}  (by {})", s(&e["word"]), s(&e["conjugator"])));
            }
            out
        }
        "classify" => {
            let c = &x["classification"];
            match c["class"].as_str().unwrap_or_default() {
                "periodic" => format!("periodic: {} power {}, conjugator {}", s(&c["kind"]), c["k"], s(&c["conjugator"])),
                "reducible" => format!(
                    "reducible: curves {} after conjugating by {}{}",
                    curves(&c["reduction"]),
                    s(&c["rounding_conjugator"]),
                    if c["crs_exact"] == json!(true) { "" } else { " (canonical system not certified)" }
                ),
                other => other.replace('_', "-"),
            }
        }
        "reduce" => {
            let d = &x["decomposition"];
            let mut out = format!("curves {}\ntubular {}", curves(&d["system"]), s(&d["tubular"]));
            for (j, i) in d["interiors"].as_array().into_iter().flatten().enumerate() {
                out.push_str(&format!("\ninterior {} {}", j + 1, s(i)));
            }
            out
        }
        "regular-form" => {
            let f = &x["regular_form"];
            let mut out = format!("tubular {}\nconjugator {}", s(&f["decomposition"]["tubular"]), s(&f["conjugator"]));
            for (i, b) in f["nontrivial"].as_array().into_iter().flatten().enumerate() {
                out.push_str(&format!("\norbit {} {}", i + 1, s(b)));
            }
            out
        }
        "centralizer" => {
            let mut out = format!("{} generators (bound {})", x["count"], x["bound"]);
            if x["complete"] != json!(true) {
                out.push_str(", search incomplete");
            }
            for g in x["generators"].as_array().into_iter().flatten() {
                out.push_str(&format!("\n{:<14} {}", s(&g["tag"]), s(&g["word"])));
            }
            out
        }
        "bound" => s(&x["bound"]),
        _ => x.to_string(),
    }
}
