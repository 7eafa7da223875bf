//! Plain-text renderings of labelled matrices and quivers.

use std::fmt::Display;

use crate::quiver::Quiver;

/// CSV with a header row of column labels and a label in front of each row.
pub fn matrix_csv<T: Display>(row_labels: &[String], col_labels: &[String], rows: &[Vec<T>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("label").chain(col_labels.iter().map(String::as_str));
    w.write_record(header).expect("in-memory write");
    for (label, row) in row_labels.iter().zip(rows) {
        let record = std::iter::once(label.clone()).chain(row.iter().map(ToString::to_string));
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// One `<a, b, c>` line per arrow group, vertices numbered from 1.
pub fn quiver_triples(q: &Quiver) -> String {
    q.triples().into_iter().map(|(a, b, c)| format!("<{}, {}, {}>\n", a + 1, b + 1, c)).collect()
}

/// Arrow multiplicity matrix as CSV.
pub fn quiver_csv(q: &Quiver) -> String {
    matrix_csv(q.labels(), q.labels(), q.matrix())
}
