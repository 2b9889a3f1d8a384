use super::SurveyRow;

pub fn survey_json(rows: &[SurveyRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("survey rows serialize");
    s.push('\n');
    s
}

/// One line per row: `schema_version,m,classes,cg_fake,alexander_norm,cg_fake_q`.
pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let mut s = String::from("schema_version,m,classes,cg_fake,alexander_norm,cg_fake_q\n");
    for r in rows {
        let qs: Vec<String> = r.details.iter().map(|d| d.q.to_string()).collect();
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.schema_version,
            r.m,
            r.classes,
            r.cg_fake,
            r.alexander_norm,
            qs.join(" ")
        ));
    }
    s
}
