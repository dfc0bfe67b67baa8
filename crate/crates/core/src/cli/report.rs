//! Sweep reports, CSV output and linear fits.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::Result;

/// One `(s, j)` row of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub s: usize,
    pub j: i64,
    /// `None` for the zero module.
    pub reg: Option<i64>,
    pub dim: i64,
    pub ann_exp: Option<usize>,
    pub predicted: Option<i64>,
    /// Set exactly when the row carries a check.
    pub pass: Option<bool>,
}

impl SweepRow {
    pub fn new(s: usize, j: i64) -> Self {
        SweepRow { s, j, reg: None, dim: -1, ann_exp: None, predicted: None, pass: None }
    }
}

/// Data about a run that does not belong in the CSV.
#[derive(Clone, Debug, Default)]
pub struct Metadata {
    pub ring: String,
    pub ideal_hash: String,
    pub field: String,
    pub wall_time_ms: u128,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub metadata: Metadata,
    /// Free-form lines such as fitted bounds.
    pub notes: Vec<String>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

impl SweepReport {
    /// True iff every checked row passes.
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass != Some(false))
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["s", "j", "reg", "dim", "ann_exp", "predicted", "pass"])?;
        for r in &self.rows {
            w.write_record([r.s.to_string(), r.j.to_string(), opt(&r.reg), r.dim.to_string(), opt(&r.ann_exp), opt(&r.predicted), opt(&r.pass)])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        write_atomically(path, &self.to_csv()?)
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.metadata;
        writeln!(f, "ring {}  field {}  ideal {}  time {} ms", m.ring, m.field, m.ideal_hash, m.wall_time_ms)?;
        writeln!(f, "{:>3} {:>5} {:>5} {:>4} {:>7} {:>9} {:>5}", "s", "j", "reg", "dim", "ann_exp", "predicted", "pass")?;
        for r in &self.rows {
            let reg = r.reg.map_or_else(|| "zero".to_string(), |v| v.to_string());
            writeln!(f, "{:>3} {:>5} {:>5} {:>4} {:>7} {:>9} {:>5}", r.s, r.j, reg, r.dim, opt(&r.ann_exp), opt(&r.predicted), opt(&r.pass))?;
        }
        for n in &self.notes {
            writeln!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Writes to a sibling temporary file and renames it over `path`.
pub fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    fs::write(&tmp, contents)?;
    if let Err(e) = fs::rename(&tmp, path) {
        let _ = fs::remove_file(&tmp);
        return Err(e.into());
    }
    Ok(())
}

/// Least-squares line `y ≈ slope·x + intercept`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// `y - fitted`, in input order.
    pub residuals: Vec<f64>,
}

impl LinearFit {
    /// `None` for fewer than one point. A single point or constant `x` gives slope 0.
    pub fn least_squares(points: &[(f64, f64)]) -> Option<Self> {
        if points.is_empty() {
            return None;
        }
        let n = points.len() as f64;
        let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
        let my = points.iter().map(|p| p.1).sum::<f64>() / n;
        let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
        let intercept = my - slope * mx;
        let residuals = points.iter().map(|p| p.1 - (slope * p.0 + intercept)).collect();
        Some(LinearFit { slope, intercept, residuals })
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }

    /// The same slope with the intercept raised until no point lies above the line.
    pub fn upper_envelope(&self) -> LinearFit {
        let lift = self.max_residual();
        LinearFit { slope: self.slope, intercept: self.intercept + lift, residuals: self.residuals.iter().map(|r| r - lift).collect() }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

impl fmt::Display for LinearFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res: Vec<String> = self.residuals.iter().map(|r| format!("{r:.3}")).collect();
        write!(f, "slope {:.4} intercept {:.4} residuals [{}]", self.slope, self.intercept, res.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut a = SweepRow::new(2, -3);
        a.reg = Some(1);
        a.dim = 0;
        a.predicted = Some(1);
        a.pass = Some(true);
        let b = SweepRow::new(2, -1);
        let r = SweepReport { rows: vec![a, b], ..Default::default() };
        assert_eq!(r.to_csv().unwrap(), "s,j,reg,dim,ann_exp,predicted,pass\n2,-3,1,0,,1,true\n2,-1,,-1,,,\n");
        assert!(r.all_pass());
    }

    #[test]
    fn fits() {
        let f = LinearFit::least_squares(&[(2.0, 1.0), (3.0, 2.0), (4.0, 3.0)]).unwrap();
        assert!((f.slope - 1.0).abs() < 1e-12 && (f.intercept + 1.0).abs() < 1e-12);
        let g = LinearFit::least_squares(&[(0.0, 0.0), (1.0, 2.0), (2.0, 1.0)]).unwrap().upper_envelope();
        assert!(g.residuals.iter().all(|r| *r <= 1e-12));
        assert!(g.residuals.iter().any(|r| r.abs() < 1e-12));
        assert!(LinearFit::least_squares(&[]).is_none());
    }

    #[test]
    fn atomic_write() {
        let dir = std::env::temp_dir().join(format!("blc-report-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = dir.join("r.csv");
        write_atomically(&p, "a\n").unwrap();
        assert_eq!(fs::read_to_string(&p).unwrap(), "a\n");
        assert!(!dir.join(".r.csv.tmp").exists());
        fs::remove_dir_all(&dir).unwrap();
    }
}
