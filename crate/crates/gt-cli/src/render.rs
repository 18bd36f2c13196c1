//! Text rendering, most notably the character table layout with factorized
//! centralizer orders, class name and power map header rows, and dots for
//! zeros.

use gt_core::chartab::CharacterTable;

fn prime_factorization(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn character_table_text(t: &CharacterTable) -> String {
    let k = t.class_count();
    let primes: Vec<u64> = prime_factorization(t.order).iter().map(|&(p, _)| p).collect();

    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    for &p in &primes {
        let cells = (0..k)
            .map(|c| {
                let e = prime_factorization(t.centralizer_orders[c])
                    .iter()
                    .find(|&&(q, _)| q == p)
                    .map(|&(_, e)| e)
                    .unwrap_or(0);
                if e == 0 {
                    ".".to_string()
                } else {
                    e.to_string()
                }
            })
            .collect();
        rows.push((p.to_string(), cells));
    }
    rows.push((String::new(), vec![String::new(); k]));
    rows.push((String::new(), t.class_names.clone()));
    for (&p, map) in &t.power_maps {
        let cells = map.iter().map(|&c| t.class_names[c].clone()).collect();
        rows.push((format!("{p}P"), cells));
    }
    rows.push((String::new(), vec![String::new(); k]));
    for (i, row) in t.irreducibles.iter().enumerate() {
        let cells = row
            .iter()
            .map(|v| {
                if v.is_zero() {
                    ".".to_string()
                } else {
                    v.format().replace(' ', "")
                }
            })
            .collect();
        rows.push((format!("X.{}", i + 1), cells));
    }

    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut col_widths = vec![0usize; k];
    for (_, cells) in &rows {
        for (c, cell) in cells.iter().enumerate() {
            col_widths[c] = col_widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    for (label, cells) in &rows {
        let blank = label.is_empty() && cells.iter().all(|c| c.is_empty());
        if blank {
            out.push('\n');
            continue;
        }
        out.push_str(&format!("{label:>label_width$}"));
        for (c, cell) in cells.iter().enumerate() {
            out.push_str(&format!("  {:>width$}", cell, width = col_widths[c]));
        }
        out.push('\n');
    }
    out
}
