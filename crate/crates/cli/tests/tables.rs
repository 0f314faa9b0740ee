use cli::tables::{members, table, HEADER};

#[test]
fn tables_match_golden_files() {
    let golden = [
        include_str!("golden/table1.tsv"),
        include_str!("golden/table2.tsv"),
        include_str!("golden/table3.tsv"),
        include_str!("golden/table4.tsv"),
        include_str!("golden/table5.tsv"),
    ];
    for (i, want) in golden.iter().enumerate() {
        let got = table(i + 1).unwrap();
        if got != *want {
            for (g, w) in got.lines().zip(want.lines()) {
                assert_eq!(g, w, "table {}", i + 1);
            }
            panic!("table {} differs in length", i + 1);
        }
    }
}

#[test]
fn every_row_is_well_formed() {
    for n in 1..=5 {
        let t = table(n).unwrap();
        let mut lines = t.lines();
        assert_eq!(lines.next(), Some(HEADER));
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), members(n).len());
        for r in rows {
            let cols: Vec<&str> = r.split('\t').collect();
            assert_eq!(cols.len(), 6, "{r}");
            let f: usize = cols[1].parse().unwrap();
            assert!(f >= 4 && f.is_multiple_of(2), "{r}");
        }
    }
}

#[test]
fn sporadic_rows() {
    let t = table(5).unwrap();
    let row = |name: &str| t.lines().find(|l| l.starts_with(name)).unwrap().to_string();
    assert!(row("S₃₆5").contains("αβ², α²δ², αγ³δ, γδ³, γ⁶\tD_3"));
    assert!(row("S₃₆6").contains("α=1/3π, β=5/9π, γ=7/18π, δ=5/6π"));
    assert!(row("S′₁₆3").ends_with("D_4"));
    assert!(row("S₁₆3").ends_with("S_8"));
}
