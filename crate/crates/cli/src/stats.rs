//! Token frequency tables.

use std::cmp::Ordering;
use std::collections::HashMap;

use shqip_core::alphabet::collate_str;
use shqip_core::analysis::tokenize;

pub struct Row {
    pub token: String,
    pub count: usize,
    /// Share in hundredths of a percent.
    pub share: u64,
}

/// Lowercased token counts, most frequent first and ties in alphabet
/// order. Shares are rounded by largest remainder so they add up to exactly
/// 100.00%.
pub fn count(text: &str) -> Vec<Row> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for t in tokenize(text) {
        *counts.entry(t.surface.to_lowercase()).or_default() += 1;
    }
    let mut rows: Vec<Row> = counts
        .into_iter()
        .map(|(token, count)| Row { token, count, share: 0 })
        .collect();
    rows.sort_by(|a, b| match b.count.cmp(&a.count) {
        Ordering::Equal => collate_str(&a.token, &b.token).then_with(|| a.token.cmp(&b.token)),
        o => o,
    });
    let total: u64 = rows.iter().map(|r| r.count as u64).sum();
    if total == 0 {
        return rows;
    }
    let mut remainders = Vec::with_capacity(rows.len());
    let mut given = 0;
    for (i, r) in rows.iter_mut().enumerate() {
        let scaled = r.count as u64 * 10_000;
        r.share = scaled / total;
        given += r.share;
        remainders.push((scaled % total, i));
    }
    remainders.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, i) in remainders.iter().take((10_000 - given) as usize) {
        rows[i].share += 1;
    }
    rows
}

fn percent(hundredths: u64) -> String {
    format!("{}.{:02}%", hundredths / 100, hundredths % 100)
}

pub fn render(rows: &[Row], tsv: bool) -> String {
    let mut out = String::new();
    if tsv {
        out.push_str("token\tcount\tshare\n");
    }
    for r in rows {
        out.push_str(&format!("{}\t{}\t{}\n", r.token, r.count, percent(r.share)));
    }
    let total: usize = rows.iter().map(|r| r.count).sum();
    let top: u64 = rows.iter().take(5).map(|r| r.share).sum();
    let mark = if tsv { "" } else { "#" };
    out.push_str(&format!("{mark}tokens\t{total}\n"));
    out.push_str(&format!("{mark}top5\t{}\n", percent(top)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_thirds() {
        let rows = count("të të e");
        assert_eq!(
            render(&rows, false),
            "të\t2\t66.67%\ne\t1\t33.33%\n#tokens\t3\n#top5\t100.00%\n"
        );
    }

    #[test]
    fn shares_add_up() {
        let rows = count("a b c d e f g");
        assert_eq!(rows.iter().map(|r| r.share).sum::<u64>(), 10_000);
        let order: Vec<&str> = rows.iter().map(|r| r.token.as_str()).collect();
        assert_eq!(order, ["a", "b", "c", "d", "e", "f", "g"]);
    }

    #[test]
    fn case_folded_and_collated() {
        let rows = count("Dita dhamb duar DITA");
        let order: Vec<(&str, usize)> = rows.iter().map(|r| (r.token.as_str(), r.count)).collect();
        assert_eq!(order, [("dita", 2), ("duar", 1), ("dhamb", 1)]);
    }

    #[test]
    fn empty_text() {
        assert!(count(" .. ").is_empty());
        assert_eq!(render(&[], false), "#tokens\t0\n#top5\t0.00%\n");
    }
}
