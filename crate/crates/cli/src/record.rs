use std::io::Write;

use pqc_core::search::SearchResult;
use pqc_core::{FieldSpec, Method};
use serde::{Deserialize, Serialize};

/// One run, as written to standard output. Field order is the wire order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub f: usize,
    pub q: u32,
    pub n: u32,
    pub method: String,
    pub seed: Option<u64>,
    pub fixed_colors: Option<usize>,
    pub budget: Option<u64>,
    pub order: Vec<[usize; 2]>,
    /// 13 fractional digits, or a hexadecimal float with `--raw`.
    pub bound: String,
    pub cond_entropies: Vec<f64>,
    pub wall_time_ms: u64,
}

pub struct Run {
    pub record: RunRecord,
    pub evaluations: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Knobs {
    pub seed: Option<u64>,
    pub fixed_colors: Option<usize>,
    pub budget: Option<u64>,
}

pub fn build(
    method: Method,
    field: FieldSpec,
    n: u32,
    knobs: Knobs,
    result: &SearchResult,
    wall_time_ms: u64,
    raw: bool,
) -> Run {
    let best = &result.best;
    Run {
        record: RunRecord {
            f: best.order.vertex_count(),
            q: field.q(),
            n,
            method: method.name().to_string(),
            seed: knobs.seed,
            fixed_colors: knobs.fixed_colors,
            budget: knobs.budget,
            order: best.order.edges().iter().map(|e| [e.k(), e.l()]).collect(),
            bound: format_bound(best.bound, raw),
            cond_entropies: best.cond_entropies.clone(),
            wall_time_ms,
        },
        evaluations: result.evaluations,
    }
}

pub fn format_bound(x: f64, raw: bool) -> String {
    if raw {
        hex_float(x)
    } else {
        format!("{x:.13}")
    }
}

/// `x` as a C99 hexadecimal float, e.g. `0x1.0a1b2c3d4e5f6p-1`.
pub fn hex_float(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0x0p+0"
        } else {
            "0x0p+0"
        }
        .into();
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1 << 52) - 1);
    let (lead, exp) = if exp == 0 {
        (0, -1022)
    } else {
        (1, exp - 1023)
    };
    let digits = format!("{frac:013x}");
    let digits = digits.trim_end_matches('0');
    if digits.is_empty() {
        format!("{sign}0x{lead}p{exp:+}")
    } else {
        format!("{sign}0x{lead}.{digits}p{exp:+}")
    }
}

pub fn write_runs(out: &mut dyn Write, runs: &[Run], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for run in runs {
                serde_json::to_writer(&mut *out, &run.record)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(["f", "method", "bound", "evaluations", "wall_time_ms"])?;
            for run in runs {
                let r = &run.record;
                w.write_record([
                    r.f.to_string(),
                    r.method.clone(),
                    r.bound.clone(),
                    run.evaluations.to_string(),
                    r.wall_time_ms.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for run in runs {
                let r = &run.record;
                let order: Vec<String> = r.order.iter().map(|[k, l]| format!("{k},{l}")).collect();
                writeln!(out, "method       {}", r.method)?;
                writeln!(out, "f q n        {} {} {}", r.f, r.q, r.n)?;
                writeln!(out, "order        {}", order.join(";"))?;
                writeln!(out, "bound        {}", r.bound)?;
                writeln!(out, "evaluations  {}", run.evaluations)?;
                writeln!(out, "wall time    {} ms", r.wall_time_ms)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_floats() {
        assert_eq!(hex_float(1.0), "0x1p+0");
        assert_eq!(hex_float(0.5), "0x1p-1");
        assert_eq!(hex_float(-3.0), "-0x1.8p+1");
        assert_eq!(hex_float(0.1), "0x1.999999999999ap-4");
        assert_eq!(hex_float(f64::MIN_POSITIVE / 2.0), "0x0.8p-1022");
        assert_eq!(hex_float(0.0), "0x0p+0");
    }

    #[test]
    fn thirteen_digits() {
        assert_eq!(format_bound(0.5198943946817123, false), "0.5198943946817");
        assert_eq!(format_bound(1.0, false), "1.0000000000000");
    }
}
