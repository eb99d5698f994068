//! Quantities as CSV (chart data) and as bare JSON triple arrays.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::netsjson::{quantity_triples, Triple};
use tqnet_core::{Num, TemporalQuantity, Time};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsvForm {
    /// `start,finish,value`, one row per interval.
    Triples,
    /// `t,value`, one row per defined instant.
    Instants,
}

pub fn write_tq_csv<W: Write>(q: &TemporalQuantity, form: CsvForm, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match form {
        CsvForm::Triples => {
            w.write_record(["start", "finish", "value"])?;
            for (s, f, v) in q.triples() {
                w.write_record([s.to_string(), f.to_string(), Num(v).to_string()])?;
            }
        }
        CsvForm::Instants => {
            w.write_record(["t", "value"])?;
            for (s, f, v) in q.triples() {
                let v = Num(v).to_string();
                for t in s..f {
                    w.write_record([t.to_string(), v.clone()])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn tq_csv_string(q: &TemporalQuantity, form: CsvForm) -> String {
    let mut buf = Vec::new();
    write_tq_csv(q, form, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// Reads the triple form written by [`write_tq_csv`].
pub fn read_tq_csv<R: Read>(input: R) -> Result<TemporalQuantity> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers()?.clone();
    if headers.iter().map(str::trim).collect::<Vec<_>>() != ["start", "finish", "value"] {
        return Err(Error::Invalid(format!("expected header start,finish,value, found {}", headers.iter().collect::<Vec<_>>().join(","))));
    }
    let mut triples = Vec::new();
    for (k, record) in r.records().enumerate() {
        let record = record?;
        let field = |i: usize| record.get(i).map(str::trim).unwrap_or("");
        let bad = || Error::Invalid(format!("row {}: expected integer start, integer finish, numeric value", k + 2));
        let s: Time = field(0).parse().map_err(|_| bad())?;
        let f: Time = field(1).parse().map_err(|_| bad())?;
        let v: f64 = field(2).parse().map_err(|_| bad())?;
        triples.push((s, f, v));
    }
    Ok(TemporalQuantity::from_triples(triples)?)
}

pub fn tq_to_json(q: &TemporalQuantity) -> String {
    serde_json::to_string(&quantity_triples(q)).expect("finite values")
}

/// Parses `[[s, f, v], ...]`.
pub fn tq_from_json(text: &str) -> Result<TemporalQuantity> {
    let triples: Vec<Triple> =
        serde_json::from_str(text).map_err(|e| Error::NetsJson { path: "$".into(), message: e.to_string() })?;
    Ok(TemporalQuantity::from_triples(triples.into_iter().map(|(s, f, v)| (s, f, v.0)))?)
}
