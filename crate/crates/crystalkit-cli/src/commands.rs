//! One function per subcommand. Each returns the text to print.

use std::fmt::Write;

use clap::ValueEnum;
use crystalkit::charalg::{self, CauchyKind};
use crystalkit::crystal::{self, Crystal};
use crystalkit::fockcrystal::{self, in_boson_weights, HSet};
use crystalkit::partitions::{lr_coefficient, GlWeight, Partition, PartitionPair};
use crystalkit::qwedge::{self, WedgeSpace, WedgeWord};
use crystalkit::tableaux;
use crystalkit::{Error, Result};
use serde_json::{json, Value};

use crate::render::{self, document};
use crate::{Command, Outcome};

/// Largest node count `crystal-graph` writes out.
const GRAPH_CAP: usize = 10_000;

/// Largest degree accepted by `transition-check`.
const MAX_TRANSITION_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GraphKind {
    /// Semistandard tableaux of shape μ.
    Sst,
    /// Dual tableaux of shape ν.
    Dual,
    /// Bitableaux of shape (μ,ν).
    Bitableaux,
    /// 0-1 matrices with m rows and n columns.
    Matrix,
}

pub fn run(cmd: Command, budget: usize) -> Result<Outcome> {
    match cmd {
        Command::Lr { lam, mu, nu, json } => Ok(lr(&lam, &mu, &nu, json)),
        Command::TensorDecompose { mu, nu, n, json } => tensor_decompose(&mu, &nu, n, json, budget),
        Command::Bitableaux { mu, nu, n, json } => bitableaux(&mu, &nu, n, json, budget),
        Command::Howe { m, n, json } => howe(m, n, json, budget),
        Command::HSet {
            mu,
            nu,
            zeta,
            eta,
            json,
        } => h_set(
            &PartitionPair::new(mu, nu),
            &PartitionPair::new(zeta, eta),
            json,
            budget,
        ),
        Command::Straighten { word, m, n, json } => straighten(&word, m, n, json),
        Command::CanonicalBasis {
            m,
            n,
            row_weight,
            col_weight,
            json,
        } => canonical_basis(m, n, &row_weight.0, &col_weight.0, json),
        Command::CrystalGraph {
            kind,
            mu,
            nu,
            n,
            m,
            json,
        } => crystal_graph(kind, &mu, &nu, m, n, json, budget),
        Command::Socle {
            a,
            b,
            g,
            d2,
            layer,
            json: _,
        } => socle(&PartitionPair::new(a, b), &PartitionPair::new(g, d2), layer),
        Command::TransitionCheck { degree, json } => transition_check(degree, json),
        Command::CauchyVerify {
            kind,
            k,
            degree,
            json,
        } => cauchy_verify(&kind, k, degree, json, budget),
    }
}

fn lr(lam: &Partition, mu: &Partition, nu: &Partition, json: bool) -> Outcome {
    let c = lr_coefficient(lam, mu, nu);
    if json {
        Outcome::ok(document(json!({
            "lambda": render::partition(lam),
            "mu": render::partition(mu),
            "nu": render::partition(nu),
            "coefficient": c,
        })))
    } else {
        Outcome::ok(format!("{c}\n"))
    }
}

fn tensor_decompose(
    mu: &Partition,
    nu: &Partition,
    n: Option<u32>,
    json: bool,
    budget: usize,
) -> Result<Outcome> {
    let n = n.unwrap_or((mu.size() + nu.size() + 2) as u32);
    let table = tableaux::tensor_multiplicities(mu, nu, n, budget)?;
    if json {
        let entries: Vec<Value> = table
            .iter()
            .map(|(p, k)| json!({ "pair": render::pair(p), "mult": k }))
            .collect();
        return Ok(Outcome::ok(document(json!({ "n": n, "entries": entries }))));
    }
    let mut out = String::new();
    for (p, k) in &table {
        let _ = writeln!(out, "{p}\t{k}");
    }
    Ok(Outcome::ok(out))
}

fn bitableaux(
    mu: &Partition,
    nu: &Partition,
    n: Option<u32>,
    json: bool,
    budget: usize,
) -> Result<Outcome> {
    let n = n.unwrap_or((mu.len() + nu.len() + 1) as u32);
    let bt = tableaux::bitableaux_crystal(mu, nu, n)?;
    let elems = bt.elements();
    if elems.len() > budget {
        return Err(Error::Budget {
            explored: elems.len(),
            budget,
        });
    }
    let iso = tableaux::verify_bitableaux_iso(mu, nu, n)?;
    let stdout = if json {
        document(
            json!({ "mu": render::partition(mu), "nu": render::partition(nu), "n": n,
                         "elements": elems.len(), "isomorphic": iso }),
        )
    } else {
        format!("elements\t{}\nisomorphic\t{iso}\n", elems.len())
    };
    let failure = (!iso).then(|| format!("bitableaux of shape ({mu}, {nu}) at N = {n} are not isomorphic to the tensor component"));
    Ok(Outcome { stdout, failure })
}

fn howe(m: usize, n: usize, json: bool, budget: usize) -> Result<Outcome> {
    let comps = fockcrystal::howe_decompose(m, n, budget)?;
    if json {
        let rows: Vec<Value> = comps
            .iter()
            .map(|c| {
                json!({ "lambda": render::partition(&c.lambda),
                        "conjugate": render::partition(&c.lambda.conjugate()),
                        "multiplicity": c.multiplicity, "size": c.size })
            })
            .collect();
        return Ok(Outcome::ok(document(
            json!({ "m": m, "n": n, "components": rows }),
        )));
    }
    let mut out = String::new();
    for c in &comps {
        let _ = writeln!(
            out,
            "λ={}\tλ'={}\tmultiplicity={}\tsize={}",
            c.lambda,
            c.lambda.conjugate(),
            c.multiplicity,
            c.size
        );
    }
    Ok(Outcome::ok(out))
}

fn h_set(
    top: &PartitionPair,
    bottom: &PartitionPair,
    json: bool,
    budget: usize,
) -> Result<Outcome> {
    let gamma = (&GlWeight::lambda_pair(top) - &GlWeight::lambda_pair(bottom)).without_lambda0();
    let set = if in_boson_weights(&gamma) {
        fockcrystal::h_set_stable(bottom, &gamma, budget)?
    } else {
        HSet {
            base: bottom.clone(),
            level: fockcrystal::stable_level(bottom, &gamma),
            weight: gamma.clone(),
            members: Vec::new(),
        }
    };
    if json {
        let members: Vec<Value> = set.members.iter().map(render::matrix_nat).collect();
        return Ok(Outcome::ok(document(json!({
            "top": render::pair(top),
            "bottom": render::pair(bottom),
            "gamma": gamma.to_string(),
            "level": set.level,
            "size": set.size(),
            "members": members,
        }))));
    }
    let mut out = format!(
        "gamma\t{gamma}\nlevel\t{}\nsize\t{}\n",
        set.level,
        set.size()
    );
    for m in &set.members {
        let _ = writeln!(out, "{m}");
    }
    Ok(Outcome::ok(out))
}

fn straighten(word: &str, m: Option<u32>, n: Option<u32>, json: bool) -> Result<Outcome> {
    let w: WedgeWord = word.parse()?;
    let m = m.unwrap_or_else(|| w.letters().iter().map(|l| l.row).max().unwrap_or(1));
    let n = n.unwrap_or_else(|| w.letters().iter().map(|l| l.col).max().unwrap_or(1));
    let space = WedgeSpace::new(m, n)?;
    if let Some(l) = w.letters().iter().find(|l| !space.contains(**l)) {
        return Err(Error::Domain(format!("letter {l} outside {m}×{n}")));
    }
    let x = qwedge::straighten(&w);
    if json {
        return Ok(Outcome::ok(document(
            json!({ "word": w.to_string(), "m": m, "n": n, "terms": render::wedge(&x, m, n) }),
        )));
    }
    Ok(Outcome::ok(format!("{x}\n")))
}

fn canonical_basis(m: u32, n: u32, rows: &[i64], cols: &[i64], json: bool) -> Result<Outcome> {
    let space = WedgeSpace::new(m, n)?;
    if rows.len() != m as usize || cols.len() != n as usize {
        return Err(Error::Domain(format!(
            "expected {m} row sums and {n} column sums"
        )));
    }
    let cb = space.canonical_basis(rows, cols)?;
    if cb.monomials.is_empty() {
        return Err(Error::Domain("the bi-weight space is empty".into()));
    }
    if json {
        let basis: Vec<Value> = cb
            .monomials
            .iter()
            .zip(&cb.elements)
            .map(|(x, g)| json!({ "monomial": render::monomial(x, m, n), "expansion": render::wedge(g, m, n) }))
            .collect();
        return Ok(Outcome::ok(document(
            json!({ "m": m, "n": n, "row_weight": rows, "col_weight": cols, "basis": basis }),
        )));
    }
    Ok(Outcome::ok(cb.to_csv()))
}

fn graph_output<C: Crystal>(
    c: &C,
    elems: &[C::Elem],
    json: bool,
    budget: usize,
) -> Result<Outcome> {
    if elems.len() > budget {
        return Err(Error::Budget {
            explored: elems.len(),
            budget,
        });
    }
    if !json {
        return Ok(Outcome::ok(crystal::to_dot(c, elems, GRAPH_CAP)));
    }
    let shown = &elems[..elems.len().min(GRAPH_CAP)];
    let index: std::collections::HashMap<&C::Elem, usize> =
        shown.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let nodes: Vec<String> = shown.iter().map(|b| c.label(b)).collect();
    let mut edges = Vec::new();
    for (i, b) in shown.iter().enumerate() {
        for col in c.colors() {
            if let Some(j) = c.f(col, b).and_then(|t| index.get(&t).copied()) {
                edges.push(json!([i, j, col.to_string()]));
            }
        }
    }
    Ok(Outcome::ok(document(json!({
        "nodes": nodes,
        "edges": edges,
        "truncated": shown.len() < elems.len(),
        "total": elems.len(),
    }))))
}

fn crystal_graph(
    kind: GraphKind,
    mu: &Partition,
    nu: &Partition,
    m: u32,
    n: u32,
    json: bool,
    budget: usize,
) -> Result<Outcome> {
    match kind {
        GraphKind::Sst => {
            let c = tableaux::sst_crystal(mu, n)?;
            graph_output(&c, &c.elements(), json, budget)
        }
        GraphKind::Dual => {
            let c = tableaux::dual_sst_crystal(nu, n)?;
            graph_output(&c, &c.elements(), json, budget)
        }
        GraphKind::Bitableaux => {
            let c = tableaux::bitableaux_crystal(mu, nu, n)?;
            graph_output(&c, &c.elements(), json, budget)
        }
        GraphKind::Matrix => {
            let cells = u64::from(m) * u64::from(n);
            if cells >= 63 || (1u64 << cells) > budget as u64 {
                let needed = if cells >= 63 {
                    usize::MAX
                } else {
                    1usize << cells
                };
                return Err(Error::Budget {
                    explored: needed,
                    budget,
                });
            }
            let c = fockcrystal::matrix_crystal(m as usize, n as usize)?;
            graph_output(&c, &c.elements(), json, budget)
        }
    }
}

fn socle(left: &PartitionPair, right: &PartitionPair, layer: Option<usize>) -> Result<Outcome> {
    let doc = match layer {
        Some(d) => {
            let mut v = render::socle_table(&charalg::socle_layer_general(left, right, d)?);
            v["left"] = render::pair(left);
            v["right"] = render::pair(right);
            v
        }
        None => {
            let layers = charalg::socle_layers(left, right)?;
            json!({
                "left": render::pair(left),
                "right": render::pair(right),
                "loewy_length": charalg::loewy_length(&layers),
                "layers": layers.iter().map(render::socle_table).collect::<Vec<_>>(),
            })
        }
    };
    Ok(Outcome::ok(document(doc)))
}

fn transition_check(degree: usize, json: bool) -> Result<Outcome> {
    if degree > MAX_TRANSITION_DEGREE {
        return Err(Error::Domain(format!(
            "degree {degree} exceeds the bound {MAX_TRANSITION_DEGREE}"
        )));
    }
    let ok = charalg::verify_transition_inverse(degree);
    let stdout = if json {
        document(json!({ "degree": degree, "inverse": ok }))
    } else {
        format!("degree\t{degree}\ninverse\t{ok}\n")
    };
    let failure =
        (!ok).then(|| format!("transition matrices are not inverse up to degree {degree}"));
    Ok(Outcome { stdout, failure })
}

fn cauchy_verify(kind: &str, k: usize, degree: u32, json: bool, budget: usize) -> Result<Outcome> {
    let kind: CauchyKind = kind.parse()?;
    let report = charalg::verify_cauchy(kind, k, degree, budget)?;
    let label = match kind {
        CauchyKind::EE => "E-E",
        CauchyKind::EH => "E-H",
    };
    let stdout = if json {
        document(json!({
            "kind": label, "k": k, "degree": degree,
            "compared": report.compared, "holds": report.holds(), "mismatch": report.mismatch,
        }))
    } else {
        format!(
            "kind\t{label}\nk\t{k}\ndegree\t{degree}\ncompared\t{}\nholds\t{}\n",
            report.compared,
            report.holds()
        )
    };
    Ok(Outcome {
        stdout,
        failure: report.mismatch,
    })
}
