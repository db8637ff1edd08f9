use std::fmt::Write;

use super::{CountReport, TriangleRow, UpperRow};

pub fn render_triangle_text(rows: &[TriangleRow]) -> String {
    let mut out = String::new();
    let head = [
        "structures on M_m",
        "tw(regular)",
        "tw(fiber)",
        "contact coeff",
        "stabilizations",
    ];
    let body: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.labels().join(" "),
                r.reg_twist.to_string(),
                r.fiber_twist.to_string(),
                r.contact_coeff.to_string(),
                r.choices.to_string(),
            ]
        })
        .collect();
    write_table(&mut out, &head, &body);
    out
}

pub fn render_upper_text(rows: &[UpperRow]) -> String {
    let mut out = String::new();
    let head = ["tw(xi)", "n1", "slope on dV3", "slope on dV2", "count"];
    let body: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.tw.to_string(),
                r.n1.to_string(),
                r.slope_v3.to_string(),
                r.slope_v2.to_string(),
                r.count.to_string(),
            ]
        })
        .collect();
    write_table(&mut out, &head, &body);
    out
}

pub fn render_count_text(r: &CountReport) -> String {
    let mut out = String::new();
    let p = &r.params;
    let _ = writeln!(out, "fiber={} m={} n={}", p.fiber, p.m, p.n);
    if !r.hypothesis_ok {
        let _ = writeln!(out, "warning: n outside the classified range");
    }
    let _ = writeln!(
        out,
        "lower={} upper={} closed={} agrees={}",
        r.lower_total, r.upper_total, r.closed_form, r.agrees
    );
    out
}

fn write_table<const N: usize>(out: &mut String, head: &[&str; N], body: &[[String; N]]) {
    let mut width = head.map(|h| h.chars().count());
    for row in body {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::from("|");
        for (cell, w) in cells.zip(width) {
            let pad = w - cell.chars().count();
            let _ = write!(s, " {cell}{} |", " ".repeat(pad));
        }
        let _ = writeln!(out, "{s}");
    };
    line(out, &mut head.iter().copied());
    let rule: Vec<String> = width.iter().map(|w| "-".repeat(*w)).collect();
    line(out, &mut rule.iter().map(String::as_str));
    for row in body {
        line(out, &mut row.iter().map(String::as_str));
    }
}
