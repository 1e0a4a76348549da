//! Table, JSON and CSV renderings for the subcommands.

use std::io::Write;

use gsi_core::semigroup::angle_list;
use gsi_core::{ClassificationReport, GluingSpec, GsiCatalog, GsiGapPartition, NumericalSemigroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Format;

type Out<'a> = &'a mut dyn Write;

fn space_list(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn gluing_label(spec: &GluingSpec) -> String {
    format!("{} ⊕_{{{},{}}} ℕ", spec.base(), spec.d(), spec.gamma())
}

fn witness_json(spec: &GluingSpec) -> Value {
    json!({
        "base_gens": spec.base().minimal_generators(),
        "d": spec.d(),
        "gamma": spec.gamma(),
    })
}

fn write_json_line<T: Serialize>(out: Out, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn analysis(
    out: Out,
    format: Format,
    s: &NumericalSemigroup,
    report: &ClassificationReport,
) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            let rows: Vec<(&str, String)> = vec![
                ("semigroup", s.to_string()),
                ("frobenius", s.frobenius().to_string()),
                ("conductor", s.conductor().to_string()),
                ("genus", s.genus().to_string()),
                ("multiplicity", s.multiplicity().to_string()),
                ("embedding_dimension", s.embedding_dimension().to_string()),
                ("max_generator", s.max_generator().to_string()),
                ("free", report.free.to_string()),
                ("telescopic", report.telescopic.to_string()),
                (
                    "complete_intersection",
                    report.complete_intersection.to_string(),
                ),
                ("strongly_increasing", report.si.to_string()),
                ("gsi", report.gsi.to_string()),
            ];
            for (k, v) in rows {
                writeln!(out, "{k:<23}{v}")?;
            }
            if let Some(spec) = &report.gsi_witness {
                writeln!(out, "{:<23}{}", "gsi_decomposition", gluing_label(spec))?;
            }
            if let Some(w) = &report.si_witness {
                writeln!(out, "{:<23}{}", "characteristic_e", space_list(&w.e))?;
                writeln!(out, "{:<23}{}", "characteristic_n", space_list(&w.n))?;
            }
        }
        Format::Json => {
            let value = json!({
                "gens": s.minimal_generators(),
                "frobenius": s.frobenius(),
                "genus": s.genus(),
                "multiplicity": s.multiplicity(),
                "conductor": s.conductor(),
                "embedding_dimension": s.embedding_dimension(),
                "max_generator": s.max_generator(),
                "classification": {
                    "si": report.si,
                    "gsi": report.gsi,
                    "telescopic": report.telescopic,
                    "free": report.free,
                    "complete_intersection": report.complete_intersection,
                    "si_witness": report.si_witness,
                    "gsi_witness": report.gsi_witness.as_ref().map(witness_json),
                },
            });
            write_json_line(out, &value)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "gens",
                "frobenius",
                "genus",
                "multiplicity",
                "embedding_dimension",
                "si",
                "gsi",
                "telescopic",
                "free",
                "complete_intersection",
            ])?;
            w.write_record([
                space_list(s.minimal_generators()),
                s.frobenius().to_string(),
                s.genus().to_string(),
                s.multiplicity().to_string(),
                s.embedding_dimension().to_string(),
                report.si.to_string(),
                report.gsi.to_string(),
                report.telescopic.to_string(),
                report.free.to_string(),
                report.complete_intersection.to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn partition(
    out: Out,
    format: Format,
    spec: &GluingSpec,
    glued: &NumericalSemigroup,
    p: &GsiGapPartition,
    frobenius: i64,
    genus: u64,
) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            writeln!(out, "{} = {}", gluing_label(spec), glued)?;
            writeln!(out, "{:<10}[{}, {}]", "initial", p.initial[0], p.initial[1])?;
            writeln!(out, "{:<10}{}", "middle", space_list(&p.middle))?;
            for (k, block) in p.a_blocks.iter().enumerate() {
                writeln!(
                    out,
                    "{:<10}{}",
                    format!("A[k={}]", k + 1),
                    space_list(block)
                )?;
            }
            for (l, block) in p.b_blocks.iter().enumerate() {
                writeln!(
                    out,
                    "{:<10}{}",
                    format!("B[l={}]", l + 1),
                    space_list(block)
                )?;
            }
            writeln!(out, "{:<10}{}", "gaps", p.len())?;
            writeln!(out, "{:<10}{}", "frobenius", frobenius)?;
            writeln!(out, "{:<10}{}", "genus", genus)?;
        }
        Format::Json => {
            let value = json!({
                "gens": glued.minimal_generators(),
                "base_gens": spec.base().minimal_generators(),
                "d": spec.d(),
                "gamma": spec.gamma(),
                "partition": p,
                "frobenius": frobenius,
                "genus": genus,
            });
            write_json_line(out, &value)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["part", "index", "values"])?;
            w.write_record([
                "initial".to_string(),
                String::new(),
                format!("{} {}", p.initial[0], p.initial[1]),
            ])?;
            w.write_record(["middle".to_string(), String::new(), space_list(&p.middle)])?;
            for (k, block) in p.a_blocks.iter().enumerate() {
                w.write_record(["A".to_string(), (k + 1).to_string(), space_list(block)])?;
            }
            for (l, block) in p.b_blocks.iter().enumerate() {
                w.write_record(["B".to_string(), (l + 1).to_string(), space_list(block)])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn gluing(
    out: Out,
    format: Format,
    spec: &GluingSpec,
    glued: &NumericalSemigroup,
) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            writeln!(out, "{} = {}", gluing_label(spec), glued)?;
            writeln!(out, "{:<10}{}", "gsi", spec.is_gsi())?;
            if let Some(v) = spec.violation() {
                writeln!(out, "{:<10}{}", "reason", v)?;
            }
            writeln!(out, "{:<10}{}", "frobenius", glued.frobenius())?;
            writeln!(out, "{:<10}{}", "genus", glued.genus())?;
        }
        Format::Json => {
            let value = json!({
                "gens": glued.minimal_generators(),
                "base_gens": spec.base().minimal_generators(),
                "d": spec.d(),
                "gamma": spec.gamma(),
                "gsi": spec.is_gsi(),
                "frobenius": glued.frobenius(),
                "genus": glued.genus(),
            });
            write_json_line(out, &value)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "gens",
                "base_gens",
                "d",
                "gamma",
                "gsi",
                "frobenius",
                "genus",
            ])?;
            w.write_record([
                space_list(glued.minimal_generators()),
                space_list(spec.base().minimal_generators()),
                spec.d().to_string(),
                spec.gamma().to_string(),
                spec.is_gsi().to_string(),
                glued.frobenius().to_string(),
                glued.genus().to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn catalog(out: Out, format: Format, catalog: &GsiCatalog) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            writeln!(out, "{:<10}GSI semigroups", "F")?;
            for (k, list) in &catalog.entries {
                let cell = if list.is_empty() {
                    "∅".to_string()
                } else {
                    let items: Vec<String> = list.iter().map(|e| e.semigroup.to_string()).collect();
                    format!("{{{}}}", items.join(", "))
                };
                writeln!(out, "{k:<10}{cell}")?;
            }
            writeln!(out, "total     {}", catalog.len())?;
        }
        Format::Json => {
            for record in catalog.records() {
                write_json_line(out, &record)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["frobenius", "gens", "base_gens", "d", "gamma"])?;
            for r in catalog.records() {
                w.write_record([
                    r.frobenius.to_string(),
                    space_list(&r.gens),
                    space_list(&r.base_gens),
                    r.d.to_string(),
                    r.gamma.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn scan_record(f: u64, witness: Option<&GluingSpec>) -> Value {
    json!({
        "f": f,
        "found": witness.is_some(),
        "base_gens": witness.map(|s| s.base().minimal_generators()),
        "d": witness.map(GluingSpec::d),
        "gamma": witness.map(GluingSpec::gamma),
    })
}

fn scan_rows(out: Out, format: Format, rows: &[(u64, Option<&GluingSpec>)]) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            for (f, w) in rows {
                match w {
                    Some(spec) => writeln!(out, "{f:<10}{}", gluing_label(spec))?,
                    None => writeln!(out, "{f:<10}none")?,
                }
            }
        }
        Format::Json => {
            for (f, w) in rows {
                write_json_line(out, &scan_record(*f, *w))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["f", "found", "base_gens", "d", "gamma"])?;
            for (f, spec) in rows {
                w.write_record([
                    f.to_string(),
                    spec.is_some().to_string(),
                    spec.map(|s| space_list(s.base().minimal_generators()))
                        .unwrap_or_default(),
                    spec.map(|s| s.d().to_string()).unwrap_or_default(),
                    spec.map(|s| s.gamma().to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn even(out: Out, format: Format, f: u64, witnesses: &[GluingSpec]) -> anyhow::Result<()> {
    let rows: Vec<(u64, Option<&GluingSpec>)> = if witnesses.is_empty() {
        vec![(f, None)]
    } else {
        witnesses.iter().map(|w| (f, Some(w))).collect()
    };
    if format == Format::Table {
        for (_, w) in &rows {
            match w {
                Some(spec) => writeln!(
                    out,
                    "{} = {}",
                    gluing_label(spec),
                    angle_list(&spec.glued_generators()?)
                )?,
                None => writeln!(out, "none")?,
            }
        }
        return Ok(());
    }
    scan_rows(out, format, &rows)
}

/// Table output lists only realizable values; JSON and CSV carry one
/// record per even number.
pub fn scan(out: Out, format: Format, results: &[(u64, Option<GluingSpec>)]) -> anyhow::Result<()> {
    let rows: Vec<(u64, Option<&GluingSpec>)> = results
        .iter()
        .filter(|(_, w)| format != Format::Table || w.is_some())
        .map(|(f, w)| (*f, w.as_ref()))
        .collect();
    scan_rows(out, format, &rows)
}

pub fn value_list(out: Out, format: Format, values: &[u64]) -> anyhow::Result<()> {
    match format {
        Format::Table => {
            let items: Vec<String> = values.iter().map(u64::to_string).collect();
            writeln!(out, "[ {} ]", items.join(", "))?;
        }
        Format::Json => write_json_line(out, &json!({ "values": values }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["f"])?;
            for v in values {
                w.write_record([v.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
