//! Serializable views of the library results.

use freechar::arith::rat_to_string;
use freechar::charvar::{CharVarRow, CharVarTable, Group, Variant};
use freechar::verify::{CheckStatus, VerifyReport};
use freechar::{QPoly, Rat};
use serde::{Deserialize, Serialize};

/// Coefficients in increasing degree, as exact decimal strings.
pub fn coeff_strings(p: &QPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(rat_to_string).collect()
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PolysDoc {
    pub m: u32,
    pub rows: Vec<PolysRow>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PolysRow {
    pub d: usize,
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "A_irr")]
    pub a_irr: Vec<String>,
    #[serde(rename = "A_ind")]
    pub a_ind: Vec<String>,
    #[serde(rename = "M")]
    pub m_count: Vec<String>,
    pub chi_pgl: Option<String>,
    pub chi_pgl_irr: Option<String>,
    #[serde(rename = "s_coeffs_A")]
    pub s_coeffs_a: Vec<String>,
    pub positive: bool,
    #[serde(rename = "A_text")]
    pub a_text: String,
    #[serde(rename = "A_irr_text")]
    pub a_irr_text: String,
    #[serde(rename = "A_ind_text")]
    pub a_ind_text: String,
    #[serde(rename = "M_text")]
    pub m_text: String,
    #[serde(rename = "E_gl")]
    pub e_gl: String,
    #[serde(rename = "E_pgl")]
    pub e_pgl: Option<String>,
    #[serde(rename = "E_pgl_irr")]
    pub e_pgl_irr: Option<String>,
}

fn polys_row(m: u32, row: &CharVarRow) -> freechar::Result<PolysRow> {
    let pgl = |v| -> freechar::Result<Option<String>> {
        if m >= 2 {
            Ok(Some(row.e_poly(m, Group::Pgl, v)?.to_string()))
        } else {
            Ok(None)
        }
    };
    Ok(PolysRow {
        d: row.d,
        a: coeff_strings(&row.a),
        a_irr: coeff_strings(&row.a_irr),
        a_ind: coeff_strings(&row.a_ind),
        m_count: coeff_strings(&row.m_count),
        chi_pgl: row.chi.as_ref().map(|c| rat_to_string(&c.0)),
        chi_pgl_irr: row.chi.as_ref().map(|c| rat_to_string(&c.1)),
        s_coeffs_a: rat_strings(&row.positivity.s_coeffs_a),
        positive: row.positivity.a_positive,
        a_text: row.a.to_string(),
        a_irr_text: row.a_irr.to_string(),
        a_ind_text: row.a_ind.to_string(),
        m_text: row.m_count.to_string(),
        e_gl: row.e_poly(m, Group::Gl, Variant::Full)?.to_string(),
        e_pgl: pgl(Variant::Full)?,
        e_pgl_irr: pgl(Variant::Irr)?,
    })
}

pub fn polys_doc(table: &CharVarTable) -> freechar::Result<PolysDoc> {
    Ok(PolysDoc {
        m: table.m,
        rows: table
            .rows
            .iter()
            .map(|r| polys_row(table.m, r))
            .collect::<freechar::Result<_>>()?,
    })
}

/// Flat CSV record; list-valued fields are joined with spaces.
#[derive(Serialize)]
struct PolysCsvRow<'a> {
    m: u32,
    d: usize,
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "A_irr")]
    a_irr: String,
    #[serde(rename = "A_ind")]
    a_ind: String,
    #[serde(rename = "M")]
    m_count: String,
    chi_pgl: &'a str,
    chi_pgl_irr: &'a str,
    #[serde(rename = "s_coeffs_A")]
    s_coeffs_a: String,
    positive: bool,
}

pub fn polys_csv(doc: &PolysDoc) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &doc.rows {
        w.serialize(PolysCsvRow {
            m: doc.m,
            d: r.d,
            a: r.a.join(" "),
            a_irr: r.a_irr.join(" "),
            a_ind: r.a_ind.join(" "),
            m_count: r.m_count.join(" "),
            chi_pgl: r.chi_pgl.as_deref().unwrap_or(""),
            chi_pgl_irr: r.chi_pgl_irr.as_deref().unwrap_or(""),
            s_coeffs_a: r.s_coeffs_a.join(" "),
            positive: r.positive,
        })?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn polys_text(doc: &PolysDoc) -> String {
    let mut out = format!("m = {}\n", doc.m);
    for r in &doc.rows {
        out += &format!("\nd = {}\n", r.d);
        out += &format!("  A_{}     = {}\n", r.d, r.a_text);
        out += &format!("  A_{}^irr = {}\n", r.d, r.a_irr_text);
        out += &format!("  A_{}^ind = {}\n", r.d, r.a_ind_text);
        out += &format!("  M_{}     = {}\n", r.d, r.m_text);
        out += &format!("  E(GL_{})  = {}\n", r.d, r.e_gl);
        if let Some(e) = &r.e_pgl {
            out += &format!("  E(PGL_{}) = {e}\n", r.d);
        }
        if let (Some(c), Some(ci)) = (&r.chi_pgl, &r.chi_pgl_irr) {
            out += &format!("  chi = {c}, chi^irr = {ci}\n");
        }
        out += &format!(
            "  A_{} in powers of (q-1): [{}] {}\n",
            r.d,
            r.s_coeffs_a.join(", "),
            if r.positive {
                "nonnegative"
            } else {
                "NOT nonnegative"
            }
        );
    }
    out
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct VerifyDoc {
    pub m: u32,
    pub dmax: usize,
    pub all_pass: bool,
    pub items: Vec<VerifyItem>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct VerifyItem {
    pub name: String,
    pub status: String,
    pub detail: Option<String>,
}

pub fn verify_doc(report: &VerifyReport) -> VerifyDoc {
    VerifyDoc {
        m: report.config.m,
        dmax: report.config.dmax,
        all_pass: report.all_pass(),
        items: report
            .items
            .iter()
            .map(|i| {
                let (status, detail) = match &i.status {
                    CheckStatus::Pass => ("pass", None),
                    CheckStatus::Fail(w) => ("fail", Some(w.clone())),
                    CheckStatus::Skipped(w) => ("skipped", Some(w.clone())),
                };
                VerifyItem {
                    name: i.name.clone(),
                    status: status.to_string(),
                    detail,
                }
            })
            .collect(),
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SubgroupsDoc {
    pub m: u32,
    pub rows: Vec<SubgroupRow>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SubgroupRow {
    pub n: usize,
    #[serde(rename = "J_n")]
    pub j_n: String,
    pub hall: String,
    /// `J_n / n` recovered from the irreducible counting polynomials.
    pub limit: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PermstatsDoc {
    pub m: u32,
    pub n: usize,
    pub a_n: Vec<String>,
    pub a_n_text: String,
    pub a_n_inversion: Vec<String>,
    pub tuples: Vec<TupleEntry>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct TupleEntry {
    pub tuple: String,
    pub length: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct OracleDoc {
    pub d: usize,
    pub p: u32,
    pub m: u32,
    pub orbits: u64,
    pub abs_irr: u64,
    pub abs_ind: u64,
    pub semisimple: u64,
    pub burnside: String,
    #[serde(rename = "M")]
    pub m_value: String,
    #[serde(rename = "A")]
    pub a_value: String,
    #[serde(rename = "A_irr")]
    pub a_irr_value: String,
    #[serde(rename = "A_ind")]
    pub a_ind_value: String,
    pub agree: bool,
}
