//! Tables 1–5 of the catalog as TSV, one row per family at its defaults.

use catalog::{build_many, table_row, CatalogError, FamilyId};
use quadsolve::QuadSpec;
use sphercore::Angle;

pub const HEADER: &str = "name\tf\tangles\tvalues\tvertices\tsymmetry";

/// Family names of each table, in table order.
pub fn members(table: usize) -> &'static [&'static str] {
    match table {
        1 => &["P4", "P6", "P8", "P20"],
        2 => &["E△1", "E△2", "E△3", "E△4", "E△5", "E□1", "E□2", "E□3", "E□4", "E□5"],
        3 => &["TP4", "TP6", "TP8", "TP12", "TP20", "BP6", "BP12", "QP4", "QP6", "QP12", "CP12", "SP6", "SP'6"],
        4 => &[
            "BP'8", "QP'6", "QP'8", "E'△1", "E''△1", "E'''△1", "E'△2", "E'△3", "E'△4", "E'△5", "E'(s,t)□2",
            "E''(s',t)□2", "E'''□2", "E'□4", "E'□5", "E''□5",
        ],
        5 => &["S12_1", "S16_1", "S16_2", "S16_3", "S'16_3", "S16_4", "S36_5", "S36_6"],
        _ => &[],
    }
}

/// Angle as a multiple of π: exact fractions verbatim, numeric values to
/// four decimals.
pub fn pi_text(a: Angle) -> String {
    match a.ratio() {
        Some(r) if *r.numer() == 0 => "0".into(),
        Some(r) if *r.denom() == 1 && *r.numer() == 1 => "π".into(),
        Some(r) if *r.denom() == 1 => format!("{}π", r.numer()),
        Some(r) => format!("{}/{}π", r.numer(), r.denom()),
        None => format!("{:.4}π", a.pi_multiple()),
    }
}

fn values(spec: &QuadSpec) -> String {
    spec.class
        .angle_labels()
        .into_iter()
        .map(|l| format!("{l}={}", pi_text(spec.angle(l))))
        .collect::<Vec<_>>()
        .join(", ")
}

/// TSV text of one table, header included.
pub fn table(n: usize) -> Result<String, CatalogError> {
    let ids = members(n).iter().map(|m| FamilyId::parse(m)).collect::<Result<Vec<_>, _>>()?;
    let built = build_many(&ids);
    let mut out = format!("{HEADER}\n");
    for (id, r) in ids.iter().zip(built) {
        let r = r?;
        let row = table_row(id)?;
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            row.name,
            row.f,
            row.angles,
            values(&r.spec),
            row.vertices.join(", "),
            row.symmetry
        ));
    }
    Ok(out)
}

/// All five tables, each preceded by a `# Table n` line.
pub fn all_tables() -> Result<String, CatalogError> {
    let mut out = String::new();
    for n in 1..=5 {
        out.push_str(&format!("# Table {n}\n"));
        out.push_str(&table(n)?);
    }
    Ok(out)
}
