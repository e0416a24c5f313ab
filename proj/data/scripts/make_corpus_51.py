# Copyright 2026 The irac Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes data/corpus_51.jsonl, a deterministic 51-judgment fixture."""

import json
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "corpus_51.jsonl"

CRPC = {"name": "CrPC-1973", "title": "Code of Criminal Procedure, 1973"}
CONST = {"name": "Constitution-1950", "title": "Constitution of India"}
ID_ACT = {"name": "IDA-1947", "title": "Industrial Disputes Act, 1947"}
CONTEMPT = {"name": "CCA-1971", "title": "Contempt of Courts Act, 1971"}
PMLA = {"name": "PMLA-2002", "title": "Prevention of Money Laundering Act, 2002"}
LARR = {"name": "LARR-2013", "title": "Right to Fair Compensation in Land Acquisition Act, 2013"}
HMA = {"name": "HMA-1955", "title": "Hindu Marriage Act, 1955"}
ITA = {"name": "ITA-1961", "title": "Income-tax Act, 1961"}

ANCHORS = [
    ("(2004) 7 SCC 528", "Kalyan Chandra Sarkar v. Rajesh Ranjan", 2004, "bail", CRPC, "439",
     "Successive bail applications require fresh grounds or changed circumstances."),
    ("(2012) 1 SCC 40", "Sanjay Chandra v. Central Bureau of Investigation", 2012, "bail", CRPC, "439",
     "Bail considerations include the nature of accusation and likelihood of absconding."),
    ("(2014) 8 SCC 273", "Arnesh Kumar v. State of Bihar", 2014, "bail", CRPC, "41A",
     "Arrest safeguards at the detention stage."),
    ("(1978) 1 SCC 248", "Maneka Gandhi v. Union of India", 1978, "constitutional", CONST, "21",
     "Procedure depriving liberty must be fair, just and reasonable."),
    ("(1967) 2 SCR 762", "I.C. Golaknath v. State of Punjab", 1967, "constitutional", CONST, "368",
     "Parliament cannot amend fundamental rights."),
    ("(1982) 3 SCC 235", "People's Union for Democratic Rights v. Union of India", 1982,
     "constitutional", CONST, "23", "Non-payment of minimum wage is forced labour."),
    ("(1988) 3 SCC 167", "P.N. Duda v. V.P. Shiv Shankar", 1988, "contempt", CONTEMPT, "15",
     "Fair criticism of the judiciary is not contempt."),
    ("(1998) 4 SCC 409", "Supreme Court Bar Association v. Union of India", 1998, "contempt",
     CONTEMPT, "12", "Contempt jurisdiction cannot suspend an advocate's licence."),
    ("(2019) 9 SCC 24", "P. Chidambaram v. Directorate of Enforcement", 2019, "anticipatory bail",
     PMLA, "45", "Anticipatory bail in economic offences is granted sparingly."),
    ("(2026) 3 SCC 101", "Saumya Chaurasia v. Directorate of Enforcement", 2026, "bail", PMLA, "45",
     "Twin conditions for bail in money laundering prosecutions."),
    ("(2004) 4 SCC 268", "Haryana Financial Corporation v. Presiding Officer, Labour Court", 2004,
     "service", ID_ACT, "25F", "Retrenchment compensation in service disputes."),
    ("(1991) 4 SCC 406", "Delhi Judicial Service Association v. State of Gujarat", 1991, "service",
     CONST, "129", "Protection of judicial officers from executive excess."),
    ("(1973) 4 SCC 225", "Kesavananda Bharati v. State of Kerala", 1973, "constitutional", CONST,
     "368", "Parliament may amend the Constitution but not its basic structure."),
    ("(1976) 2 SCC 521", "ADM Jabalpur v. Shivakant Shukla", 1976, "constitutional", CONST, "21",
     "Article 21 enforcement suspended during emergency."),
    ("(1950) SCR 88", "A.K. Gopalan v. State of Madras", 1950, "constitutional", CONST, "21",
     "Preventive detention under procedure established by law."),
    ("(2017) 10 SCC 1", "K.S. Puttaswamy v. Union of India", 2017, "constitutional", CONST, "21",
     "Privacy is a fundamental right."),
]

OVERRULES = [("(1973) 4 SCC 225", "(1967) 2 SCR 762"), ("(2017) 10 SCC 1", "(1976) 2 SCC 521")]
STUBS = ["(1980) 2 SCC 565", "(1962) 3 SCR 842", "(2001) 7 SCC 536"]

MATTERS = [
    ("bail", CRPC, ["437", "439"], "bail application after arrest"),
    ("anticipatory bail", CRPC, ["438"], "anticipatory bail for apprehended arrest"),
    ("service", ID_ACT, ["25F", "33"], "termination of service and reinstatement"),
    ("contempt", CONTEMPT, ["12", "15"], "wilful disobedience of court orders"),
    ("criminal appeal", CRPC, ["374", "386"], "appeal against conviction"),
    ("constitutional", CONST, ["14", "19"], "equality and freedom of expression"),
    ("employment", ID_ACT, ["2A", "10"], "industrial dispute over workman wages"),
    ("land acquisition", LARR, ["24", "26"], "compensation for acquired land"),
    ("family", HMA, ["13", "24"], "divorce and maintenance"),
    ("taxation", ITA, ["147", "148"], "reassessment of escaped income"),
]
SURNAMES = ["Sharma", "Iyer", "Reddy", "Banerjee", "Khan", "Patel", "Menon", "Singh", "Das",
            "Nair", "Joshi", "Rao"]
RESPONDENTS = ["State of Maharashtra", "State of Kerala", "Union of India", "State of Punjab",
               "State of Karnataka", "Municipal Corporation of Delhi"]


def record(citation, name, year, matter, statute, section, summary, court="Supreme Court"):
    return {
        "citation": citation,
        "name": name,
        "court": court,
        "year": year,
        "bench_size": 2,
        "bench_type": "division",
        "matter_type": matter,
        "summary": summary,
        "issues": [{"text": summary, "category": matter}],
        "rules": [{"text": summary}],
        "statutes": [dict(statute, sections=[{"number": section}])],
        "precedents": [],
    }


def main():
    rng = random.Random(51)
    records = [record(*a) for a in ANCHORS]
    by_citation = {r["citation"]: r for r in records}
    for later, earlier in OVERRULES:
        by_citation[later]["precedents"].append({"citation": earlier, "relation": "OVERRULES"})

    hc = ["High Court of Delhi", "High Court of Bombay", "High Court of Madras"]
    used = set(by_citation)
    while len(records) < 51:
        i = len(records)
        matter, statute, sections, gist = MATTERS[i % len(MATTERS)]
        year = rng.randint(1985, 2024)
        citation = f"({year}) {rng.randint(1, 12)} SCC {rng.randint(100, 999)}"
        if citation in used:
            continue
        used.add(citation)
        name = f"{rng.choice(SURNAMES)} v. {rng.choice(RESPONDENTS)}"
        court = "Supreme Court" if i % 3 else hc[i % len(hc)]
        r = record(citation, name, year, matter, statute, rng.choice(sections),
                   f"Decision on {gist}.", court)
        live = sorted(c for c, x in by_citation.items()
                      if x["matter_type"] == matter and c not in {e for _, e in OVERRULES})
        for target in rng.sample(live, min(2, len(live))):
            r["precedents"].append({"citation": target, "relation": "CITES"})
        if i % 12 == 0:
            r["precedents"].append({"citation": STUBS[(i // 12) % len(STUBS)], "relation": "CITES"})
        records.append(r)
        by_citation[citation] = r

    with OUT.open("w", encoding="utf-8") as f:
        for r in records:
            f.write(json.dumps(r, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
