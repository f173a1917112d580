use std::fmt::Write as _;

use super::chart::Series;
use super::measure::Measure;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Column {
    PrecisionEq,
    RecallEq,
    PrecisionLe,
    RecallLe,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::PrecisionEq, Column::RecallEq, Column::PrecisionLe, Column::RecallLe];

    pub fn name(self) -> &'static str {
        match self {
            Column::PrecisionEq => "precision_eq",
            Column::RecallEq => "recall_eq",
            Column::PrecisionLe => "precision_le",
            Column::RecallLe => "recall_le",
        }
    }

    pub fn from_name(name: &str) -> Option<Column> {
        Column::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// Which metric family a CSV carries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputMode {
    Single,
    Cumulative,
    #[default]
    Both,
}

impl OutputMode {
    pub fn columns(self) -> &'static [Column] {
        match self {
            OutputMode::Single => &Column::ALL[..2],
            OutputMode::Cumulative => &Column::ALL[2..],
            OutputMode::Both => &Column::ALL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricRow<T: Coefficient> {
    pub n: usize,
    pub precision_eq: Measure<T>,
    pub recall_eq: Measure<T>,
    pub precision_le: Measure<T>,
    pub recall_le: Measure<T>,
}

impl<T: Coefficient> MetricRow<T> {
    pub fn get(&self, c: Column) -> &Measure<T> {
        match c {
            Column::PrecisionEq => &self.precision_eq,
            Column::RecallEq => &self.recall_eq,
            Column::PrecisionLe => &self.precision_le,
            Column::RecallLe => &self.recall_le,
        }
    }

    /// Row with only the single-length columns filled.
    pub fn single(n: usize, precision: Measure<T>, recall: Measure<T>) -> Self {
        MetricRow {
            n,
            precision_eq: precision,
            recall_eq: recall,
            precision_le: Measure::Undefined,
            recall_le: Measure::Undefined,
        }
    }

    /// Row with only the cumulative columns filled.
    pub fn cumulative(n: usize, precision: Measure<T>, recall: Measure<T>) -> Self {
        MetricRow {
            n,
            precision_eq: Measure::Undefined,
            recall_eq: Measure::Undefined,
            precision_le: precision,
            recall_le: recall,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MetricTable<T: Coefficient> {
    pub rows: Vec<MetricRow<T>>,
}

impl<T: Coefficient> MetricTable<T> {
    /// Keeps rows with `lo <= n <= hi`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Self {
        MetricTable {
            rows: self.rows.iter().filter(|r| (lo..=hi).contains(&r.n)).cloned().collect(),
        }
    }

    /// CSV with header `n,<columns>` and values rounded to `digits` places.
    pub fn to_csv(&self, mode: OutputMode, digits: usize) -> String {
        let cols = mode.columns();
        let mut out = String::from("n");
        for c in cols {
            out.push(',');
            out.push_str(c.name());
        }
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{}", row.n);
            for &c in cols {
                out.push(',');
                out.push_str(&row.get(c).render(digits));
            }
            out.push('\n');
        }
        out
    }
}

/// Reads a metrics CSV into one series per metric column, keeping each value
/// exactly as written.
pub fn parse_metric_csv(text: &str) -> Result<Vec<Series>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::MissingHeader("csv header"))?;
    let names: Vec<&str> = header.split(',').map(str::trim).collect();
    if names.first() != Some(&"n") || names.len() < 2 {
        return Err(Error::Syntax { line: 1, message: "expected header starting with `n`".into() });
    }
    for name in &names[1..] {
        if Column::from_name(name).is_none() {
            return Err(Error::Syntax { line: 1, message: format!("unknown column `{name}`") });
        }
    }
    let mut series: Vec<Series> = names[1..].iter().map(|n| Series::new(*n)).collect();
    for (i, line) in lines {
        let line_no = i + 1;
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != names.len() {
            return Err(Error::Syntax { line: line_no, message: "wrong number of fields".into() });
        }
        let n: usize = cells[0]
            .parse()
            .map_err(|_| Error::Syntax { line: line_no, message: format!("bad length `{}`", cells[0]) })?;
        for (s, cell) in series.iter_mut().zip(&cells[1..]) {
            if *cell == "undefined" {
                s.points.push((n, None));
            } else if cell.parse::<f64>().is_ok_and(f64::is_finite) {
                s.points.push((n, Some((*cell).to_string())));
            } else {
                return Err(Error::Syntax { line: line_no, message: format!("bad value `{cell}`") });
            }
        }
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> MetricTable<i64> {
        MetricTable {
            rows: vec![
                MetricRow::single(0, Measure::ratio(1, 1), Measure::ratio(0, 0)),
                MetricRow::single(1, Measure::ratio(1, 5), Measure::ratio(1, 3)),
            ],
        }
    }

    #[test]
    fn csv_layouts() {
        let t = table();
        assert_eq!(
            t.to_csv(OutputMode::Single, 3),
            "n,precision_eq,recall_eq\n0,1.000,undefined\n1,0.200,0.333\n"
        );
        assert_eq!(t.to_csv(OutputMode::Cumulative, 1), "n,precision_le,recall_le\n0,undefined,undefined\n1,undefined,undefined\n");
        assert!(t.to_csv(OutputMode::Both, 2).starts_with("n,precision_eq,recall_eq,precision_le,recall_le\n"));
        assert_eq!(t.restrict(1, 5).rows.len(), 1);
    }

    #[test]
    fn csv_round_trip() {
        let series = parse_metric_csv(&table().to_csv(OutputMode::Single, 6)).unwrap();
        assert_eq!(series.len(), 2);
        assert_eq!(series[0].label, "precision_eq");
        assert_eq!(series[0].points, vec![(0, Some("1.000000".into())), (1, Some("0.200000".into()))]);
        assert_eq!(series[1].points[0], (0, None));
    }

    #[test]
    fn schema_mismatch() {
        assert!(parse_metric_csv("length,count\n0,1\n").is_err());
        assert!(parse_metric_csv("n,precision_eq\n0,abc\n").is_err());
        assert!(parse_metric_csv("n,precision_eq\n0\n").is_err());
        assert!(parse_metric_csv("").is_err());
    }
}
