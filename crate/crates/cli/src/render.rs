use std::sync::Arc;

use serde_json::{json, Value};
use theta_trace::burnside::{BurnsideElem, BurnsideRing, DefectReport};
use theta_trace::cyclic::HomologyReport;
use theta_trace::harness::{Format, SuiteReport};
use theta_trace::trace::{ChernReport, CrosscheckReport, TraceMatrix};

use crate::Common;

pub struct Output {
    format: Format,
}

impl From<Common> for Output {
    fn from(c: Common) -> Self {
        Output { format: c.format }
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

impl Output {
    fn json(&self, v: Value) {
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    }

    fn is_json(&self) -> bool {
        self.format == Format::Json
    }

    pub fn marks(&self, name: &str, ring: &Arc<BurnsideRing>) {
        let m = ring.marks();
        if self.is_json() {
            return self.json(json!({ "group": name, "labels": ring.labels(), "orders": m.orders(), "marks": m.rows() }));
        }
        println!("Table of marks of {name} (row H, column G/K: |(G/K)^H|)\n");
        println!("| H \\ G/K | {} |", ring.labels().join(" | "));
        println!("|---|{}", "---|".repeat(m.len()));
        for (label, row) in ring.labels().iter().zip(m.rows()) {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            let h = label.split_once('/').map_or(label.as_str(), |x| x.1);
            println!("| {h} | {} |", cells.join(" | "));
        }
    }

    pub fn theta(&self, name: &str, t: &BurnsideElem) {
        if self.is_json() {
            return self.json(json!({ "group": name, "theta": t.to_string(), "coeffs": t.coeffs(), "marks": t.marks() }));
        }
        println!("{t}");
    }

    pub fn defects(&self, name: &str, rows: &[(String, DefectReport)], ok: bool) {
        if self.is_json() {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(m, r)| {
                    json!({
                        "module": m, "subgroup": r.subgroup, "cyclic": r.cyclic, "theta_dim": r.theta_dim(),
                        "defect_dim": r.defect_dim(), "map_rank": r.map_rank, "verdict": r.verdict,
                    })
                })
                .collect();
            return self.json(json!({ "group": name, "rows": rows, "verdict": ok }));
        }
        println!("Artin defects over {name}\n");
        println!("| module | subgroup | dim θ-image | dim defect | rank |");
        println!("|---|---|---|---|---|");
        for (m, r) in rows {
            println!("| {m} | {} | {} | {} | {} |", r.subgroup, r.theta_dim(), r.defect_dim(), r.map_rank);
        }
        println!("\n{}", if ok { "pass" } else { "FAIL" });
    }

    pub fn homology(&self, r: &HomologyReport) {
        if self.is_json() {
            return self.json(serde_json::to_value(r).expect("json"));
        }
        let c = &r.certificate;
        println!("{} of {}, degrees {}..{} (window {})", r.theory, r.subject, c.valid.0, c.valid.1, c.window);
        println!("{}", tuple(&r.dims));
        if let Some(p) = c.cutoff {
            println!("column cutoff {p}, stabilized: {}", c.stabilized.unwrap_or(false));
        }
        if let Some(classes) = &r.per_class {
            println!("\n| class of | size | dims |");
            println!("|---|---|---|");
            for k in classes {
                println!("| g{} | {} | {} |", k.representative, k.size, tuple(&k.dims));
            }
        }
    }

    pub fn dtr(&self, name: &str, t: &TraceMatrix, cross: &CrosscheckReport) {
        let rows = t.matrix.to_rationals().unwrap_or_default();
        if self.is_json() {
            return self.json(json!({
                "group": name, "source": t.source, "target": t.target, "matrix": rows,
                "rank": t.rank, "k0_dim": t.k0_dim, "injective": t.injective(), "crosscheck": cross,
            }));
        }
        println!("Dennis trace of {name}: rank {} of dim K_0 = {}\n", t.rank, t.k0_dim);
        println!("| HH_0 \\ K_0 | {} |", t.source.join(" | "));
        println!("|---|{}", "---|".repeat(t.source.len()));
        for (label, row) in t.target.iter().zip(&rows) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            println!("| {label} | {} |", cells.join(" | "));
        }
        println!("\ninjective: {}, character cross-check: {}", t.injective(), cross.verdict);
    }

    pub fn chern(&self, name: &str, r: &ChernReport) {
        if self.is_json() {
            let mut v = serde_json::to_value(r).expect("json");
            v["group"] = json!(name);
            v["verdict"] = json!(r.verdict());
            return self.json(v);
        }
        println!("Chern character of {name}\n");
        println!("| C | #W | θK_0 | coinv | θHH_0 | coinv | generator orbits |");
        println!("|---|---|---|---|---|---|---|");
        for x in &r.rows {
            println!(
                "| {} | {} | {} | {} | {} | {} | {} |",
                x.subgroup, x.weyl_order, x.k0_theta, x.k0_coinvariants, x.hh_theta, x.hh_coinvariants, x.generator_orbits
            );
        }
        println!("\n(a) Σ = {} vs dim K_0 = {}, assembly rank {}: {}", r.k0_total, r.k0_dim, r.k0_assembly_rank, r.part_a());
        println!(
            "(b) Σ = {}, orbits {} vs #con = {}, assembly rank {}: {}",
            r.hh_total,
            r.orbit_total,
            r.num_classes,
            r.hh_assembly_rank,
            r.part_b()
        );
        println!("(c) square commutes: {}", r.square_commutes);
    }

    pub fn suite(&self, r: &SuiteReport) {
        if self.is_json() {
            println!("{}", r.to_json());
        } else {
            print!("{}", r.to_markdown());
        }
    }
}
