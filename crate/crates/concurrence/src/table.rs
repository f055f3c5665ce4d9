//! Simulation CSV: `index,purity,lower,upper,offset[,wootters_c_sq]`.

use std::io::{Read, Write};

use concurrence_core::SampleRow;

use crate::error::{CliError, CliResult};

const BASE_HEADER: [&str; 5] = ["index", "purity", "lower", "upper", "offset"];
const WOOTTERS_COLUMN: &str = "wootters_c_sq";

/// Twelve significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.11e}")
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::BadInput(format!("csv: {e}"))
}

/// Writes a header and one line per row. The Wootters column is present
/// when the first row carries it, and then required on every row.
pub fn write_rows<W: Write>(out: W, rows: &[SampleRow]) -> CliResult<()> {
    let with_wootters = rows.first().is_some_and(|r| r.wootters_c_sq.is_some());
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = BASE_HEADER.to_vec();
    if with_wootters {
        header.push(WOOTTERS_COLUMN);
    }
    w.write_record(&header).map_err(csv_error)?;
    for row in rows {
        let mut record = vec![
            row.index.to_string(),
            format_float(row.purity),
            format_float(row.lower),
            format_float(row.upper),
            format_float(row.offset),
        ];
        match (with_wootters, row.wootters_c_sq) {
            (true, Some(c)) => record.push(format_float(c)),
            (false, None) => {}
            _ => {
                return Err(CliError::BadInput(format!(
                    "row {} has an inconsistent column set",
                    row.index
                )))
            }
        }
        w.write_record(&record).map_err(csv_error)?;
    }
    w.flush().map_err(|e| CliError::io("writing csv", e))
}

pub fn read_rows<R: Read>(input: R) -> CliResult<Vec<SampleRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(csv_error)?.clone();
    let names: Vec<&str> = header.iter().collect();
    let with_wootters = match names.as_slice() {
        [a, b, c, d, e] if [*a, *b, *c, *d, *e] == BASE_HEADER => false,
        [a, b, c, d, e, f] if [*a, *b, *c, *d, *e] == BASE_HEADER && *f == WOOTTERS_COLUMN => true,
        _ => {
            return Err(CliError::BadInput(format!(
                "unexpected csv header: {}",
                names.join(",")
            )))
        }
    };
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|e| CliError::BadInput(format!("bad number {s:?}: {e}")))
    };
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record.map_err(csv_error)?;
        rows.push(SampleRow {
            index: record[0]
                .parse()
                .map_err(|e| CliError::BadInput(format!("bad index {:?}: {e}", &record[0])))?,
            purity: num(&record[1])?,
            lower: num(&record[2])?,
            upper: num(&record[3])?,
            offset: num(&record[4])?,
            wootters_c_sq: if with_wootters {
                Some(num(&record[5])?)
            } else {
                None
            },
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(index: usize, c: Option<f64>) -> SampleRow {
        SampleRow {
            index,
            purity: 0.98,
            lower: 1.0 / 3.0,
            upper: 0.373333333333,
            offset: 0.04,
            wootters_c_sq: c,
        }
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_float(0.04), "4.00000000000e-2");
        assert_eq!(format_float(-1.0 / 3.0), "-3.33333333333e-1");
    }

    #[test]
    fn round_trip_within_print_precision() {
        for c in [None, Some(0.25)] {
            let rows = vec![row(0, c), row(1, c)];
            let mut buf = Vec::new();
            write_rows(&mut buf, &rows).unwrap();
            let text = String::from_utf8(buf.clone()).unwrap();
            assert_eq!(
                text.lines().next().unwrap().split(',').count(),
                5 + c.is_some() as usize
            );
            let back = read_rows(buf.as_slice()).unwrap();
            assert_eq!(back.len(), 2);
            for (a, b) in rows.iter().zip(&back) {
                assert_eq!(a.index, b.index);
                assert!((a.lower - b.lower).abs() < 1e-12);
                assert_eq!(a.wootters_c_sq.is_some(), b.wootters_c_sq.is_some());
            }
        }
    }

    #[test]
    fn mixed_columns_rejected() {
        let mut buf = Vec::new();
        assert!(write_rows(&mut buf, &[row(0, Some(0.1)), row(1, None)]).is_err());
    }

    #[test]
    fn bad_header_rejected() {
        assert!(read_rows("a,b\n1,2\n".as_bytes()).is_err());
    }
}
