#!/usr/bin/env python3
"""Regenerate the shipped title taxonomy and the synthetic test fixtures.

Everything here is deterministic (fixed seed); re-running reproduces the
committed files byte-for-byte. Run from the repo root:

    python tools/gen_fixtures.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "skillgrep" / "data"
FIXTURES = ROOT / "fixtures"


# ---------------------------------------------------------------------------
# Title taxonomy
# ---------------------------------------------------------------------------

C_SUITE = [
    ("ceo", "Administrative"),
    ("c.e.o.", "Administrative"),
    ("chief executive officer", "Administrative"),
    ("chief executive", "Administrative"),
    ("cto", "Computing & IT;Engineering"),
    ("c.t.o.", "Computing & IT;Engineering"),
    ("chief technology officer", "Computing & IT;Engineering"),
    ("cfo", "Finance"),
    ("c.f.o.", "Finance"),
    ("chief financial officer", "Finance"),
    ("coo", "Operations"),
    ("c.o.o.", "Operations"),
    ("chief operating officer", "Operations"),
    ("cio", "Computing & IT"),
    ("c.i.o.", "Computing & IT"),
    ("chief information officer", "Computing & IT"),
    ("cmo", "Marketing"),
    ("c.m.o.", "Marketing"),
    ("chief marketing officer", "Marketing"),
    ("chro", "HR"),
    ("chief human resources officer", "HR"),
    ("chief medical officer", "Medical"),
    ("ciso", "Computing & IT"),
    ("chief information security officer", "Computing & IT"),
    ("founder", "Administrative"),
    ("co founder", "Administrative"),
    # no bare "president" row: it would subsume every "vice president" title
]

DEPT_WORDS = {
    "engineering": "Engineering",
    "software": "Computing & IT;Engineering",
    "marketing": "Marketing",
    "sales": "Sales",
    "finance": "Finance",
    "accounting": "Finance",
    "human resources": "HR",
    "recruiting": "HR",
    "operations": "Operations",
    "legal": "Legal",
    "it": "Computing & IT",
    "information technology": "Computing & IT",
    "medical": "Medical",
    "clinical": "Medical",
    "administrative": "Administrative",
    "education": "Educator",
}

# (role ngram, departments) -> Non-Manager unless listed in ROLE_LEVELS
ROLES = [
    ("software engineer", "Engineering;Computing & IT"),
    ("software developer", "Engineering;Computing & IT"),
    ("web developer", "Computing & IT"),
    ("frontend developer", "Computing & IT"),
    ("backend developer", "Computing & IT"),
    ("full stack developer", "Computing & IT"),
    ("data scientist", "Computing & IT"),
    ("data engineer", "Computing & IT;Engineering"),
    ("data analyst", "Computing & IT;Finance"),
    ("machine learning engineer", "Computing & IT;Engineering"),
    ("devops engineer", "Computing & IT;Engineering"),
    ("site reliability engineer", "Computing & IT;Engineering"),
    ("systems administrator", "Computing & IT"),
    ("system administrator", "Computing & IT"),
    ("database administrator", "Computing & IT"),
    ("network engineer", "Computing & IT;Engineering"),
    ("security analyst", "Computing & IT"),
    ("security engineer", "Computing & IT;Engineering"),
    ("quality assurance engineer", "Engineering;Computing & IT"),
    ("quality assurance analyst", "Computing & IT"),
    ("test engineer", "Engineering"),
    ("mechanical engineer", "Engineering"),
    ("electrical engineer", "Engineering"),
    ("civil engineer", "Engineering"),
    ("hardware engineer", "Engineering"),
    ("process engineer", "Engineering"),
    ("industrial engineer", "Engineering"),
    ("chemical engineer", "Engineering"),
    ("engineer", "Engineering"),
    ("developer", "Computing & IT"),
    ("programmer", "Computing & IT"),
    ("architect", "Engineering"),
    ("solutions architect", "Computing & IT;Engineering"),
    ("technical support specialist", "Computing & IT"),
    ("help desk technician", "Computing & IT"),
    ("accountant", "Finance"),
    ("staff accountant", "Finance"),
    ("financial analyst", "Finance"),
    ("auditor", "Finance"),
    ("bookkeeper", "Finance"),
    ("controller", "Finance"),
    ("treasurer", "Finance"),
    ("payroll specialist", "Finance;HR"),
    ("tax specialist", "Finance"),
    ("recruiter", "HR"),
    ("technical recruiter", "HR"),
    ("talent acquisition specialist", "HR"),
    ("talent acquisition", "HR"),
    ("human resources generalist", "HR"),
    ("human resources specialist", "HR"),
    ("human resources coordinator", "HR"),
    ("human resources", "HR"),
    ("benefits administrator", "HR"),
    ("people operations", "HR"),
    ("marketing specialist", "Marketing"),
    ("marketing coordinator", "Marketing"),
    ("marketing analyst", "Marketing"),
    ("digital marketing specialist", "Marketing"),
    ("seo specialist", "Marketing"),
    ("content strategist", "Marketing"),
    ("content writer", "Marketing"),
    ("copywriter", "Marketing"),
    ("social media specialist", "Marketing"),
    ("brand strategist", "Marketing"),
    ("growth marketer", "Marketing"),
    ("sales representative", "Sales"),
    ("sales associate", "Sales"),
    ("account executive", "Sales"),
    ("account manager", "Sales"),
    ("business development representative", "Sales"),
    ("sales development representative", "Sales"),
    ("inside sales representative", "Sales"),
    ("customer success manager", "Sales;Operations"),
    ("operations analyst", "Operations"),
    ("operations coordinator", "Operations"),
    ("supply chain analyst", "Operations"),
    ("logistics coordinator", "Operations"),
    ("warehouse associate", "Operations"),
    ("warehouse supervisor", "Operations"),
    ("project coordinator", "Operations"),
    ("project manager", "Operations"),
    ("program manager", "Operations"),
    ("product manager", "Operations;Marketing"),
    ("product owner", "Operations"),
    ("scrum master", "Operations;Computing & IT"),
    ("office manager", "Administrative"),
    ("office administrator", "Administrative"),
    ("administrative assistant", "Administrative"),
    ("executive assistant", "Administrative"),
    ("receptionist", "Administrative"),
    ("secretary", "Administrative"),
    ("data entry clerk", "Administrative"),
    ("clerk", "Administrative"),
    ("attorney", "Legal"),
    ("lawyer", "Legal"),
    ("paralegal", "Legal"),
    ("legal counsel", "Legal"),
    ("legal assistant", "Legal"),
    ("compliance officer", "Legal;Finance"),
    ("compliance analyst", "Legal;Finance"),
    ("contracts administrator", "Legal;Operations"),
    ("registered nurse", "Medical"),
    ("nurse", "Medical"),
    ("nurse practitioner", "Medical"),
    ("licensed practical nurse", "Medical"),
    ("physician", "Medical"),
    ("doctor", "Medical"),
    ("surgeon", "Medical"),
    ("medical assistant", "Medical"),
    ("pharmacist", "Medical"),
    ("pharmacy technician", "Medical"),
    ("physical therapist", "Medical"),
    ("occupational therapist", "Medical"),
    ("radiology technician", "Medical"),
    ("phlebotomist", "Medical"),
    ("medical biller", "Medical;Finance"),
    ("teacher", "Educator"),
    ("professor", "Educator"),
    ("instructor", "Educator"),
    ("tutor", "Educator"),
    ("teaching assistant", "Educator"),
    ("school principal", "Educator"),
    ("curriculum developer", "Educator"),
    ("trainer", "Educator;HR"),
    ("chef", "Operations"),
    ("line cook", "Operations"),
    ("restaurant server", "Operations"),
    ("barista", "Operations"),
    ("cashier", "Sales;Operations"),
    ("store associate", "Sales"),
    ("driver", "Operations"),
    ("dispatcher", "Operations"),
    ("technician", "Operations"),
    ("maintenance technician", "Operations"),
    ("electrician", "Engineering;Operations"),
    ("machinist", "Operations"),
    ("welder", "Operations"),
    ("business analyst", "Operations;Finance"),
    ("research scientist", "Engineering"),
    ("research analyst", "Other"),
    ("consultant", "Other"),
    ("intern", "Other"),
    ("analyst", "Other"),
    ("specialist", "Other"),
    ("coordinator", "Other"),
]

# Role ngrams that carry a managerial level on their own.
ROLE_LEVELS = {
    "account manager": "Manager",
    "customer success manager": "Manager",
    "project manager": "Manager",
    "program manager": "Manager",
    "product manager": "Manager",
    "office manager": "Manager",
    "warehouse supervisor": "Manager",
    "school principal": "Director",
}


def taxonomy_rows():
    rows = [("manager", "Manager", "Other"), ("supervisor", "Manager", "Other"),
            ("director", "Director", "Other"), ("managing director", "Director", "Other"),
            ("vice president", "VP-Level", "Other"),
            ("senior vice president", "VP-Level", "Other"),
            ("executive vice president", "VP-Level", "Other"),
            ("assistant vice president", "VP-Level", "Other"),
            ("vp", "VP-Level", "Other"),
            ("general manager", "Manager", "Operations"),
            ("branch manager", "Manager", "Operations"),
            ("store manager", "Manager", "Sales;Operations"),
            ("head of", "Director", "Other")]
    for gram, depts in C_SUITE:
        rows.append((gram, "C-Level", depts))
    for word, depts in DEPT_WORDS.items():
        rows.append((word, "Non-Manager", depts))
        rows.append((f"{word} manager", "Manager", depts))
        rows.append((f"{word} director", "Director", depts))
        rows.append((f"director of {word}", "Director", depts))
        rows.append((f"vice president of {word}", "VP-Level", depts))
        rows.append((f"head of {word}", "Director", depts))
    for gram, depts in ROLES:
        rows.append((gram, ROLE_LEVELS.get(gram, "Non-Manager"), depts))
    # Dedup keeping the first (most specific) definition.
    seen = set()
    out = []
    for gram, level, depts in rows:
        if gram in seen:
            continue
        seen.add(gram)
        out.append((gram, level, depts))
    return out


def write_taxonomy():
    rows = taxonomy_rows()
    lines = ["ngram,level,departments"]
    for gram, level, depts in rows:
        lines.append(f"{gram},{level},{depts}")
    (DATA / "title_taxonomy.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"title_taxonomy.csv: {len(rows)} rows")


# ---------------------------------------------------------------------------
# Skill lexicon (~200 entries)
# ---------------------------------------------------------------------------

# (surface, cooccurrence count). Counts are chosen against the default
# thresholds (1 word: 8, 2 words: 4, 3 words: 3, 4+: 2); a handful sit below
# on purpose to exercise filtering.
SKILL_LEXICON = [
    ("python", 9200), ("java", 8900), ("scala", 2100), ("c++", 4300),
    ("c#", 3900), ("javascript", 7800), ("typescript", 2600), ("sql", 8100),
    ("nosql", 900), ("html", 5100), ("css", 4800), ("php", 2900),
    ("ruby", 1400), ("go", 1100), ("rust", 450), ("r", 1600),
    ("matlab", 800), ("perl", 600), ("swift", 700), ("kotlin", 500),
    ("jquery", 2400), ("react", 3100), ("angular", 2200), ("vue", 640),
    ("node.js", 1800), ("django", 900), ("flask", 700), ("spring", 1300),
    (".net", 2800), ("c# & .net", 310), ("c#/.net", 280), ("c# / .net", 120),
    ("c# and .net", 95), ("asp.net", 860), ("e-mail", 2500), ("email", 3400),
    ("e-mail marketing", 420), ("email marketing", 610),
    ("machine learning", 4120), ("deep learning", 1300),
    ("natural language processing", 520), ("computer vision", 430),
    ("data analysis", 2900), ("data mining", 980), ("data visualization", 760),
    ("data modeling", 540), ("data entry", 1900), ("big data", 1500),
    ("statistics", 1700), ("mathematics", 1200), ("linear algebra", 160),
    ("apache spark", 620), ("hadoop", 810), ("kafka", 380), ("airflow", 240),
    ("tableau", 980), ("power bi", 720), ("excel", 6200), ("microsoft excel", 2100),
    ("microsoft office", 4400), ("microsoft word", 1500), ("powerpoint", 1800),
    ("google analytics", 690), ("salesforce", 1400), ("marketo", 310),
    ("hubspot", 420), ("crm", 2300), ("sap", 1500), ("oracle", 1700),
    ("mysql", 1600), ("postgresql", 900), ("mongodb", 850), ("redis", 420),
    ("elasticsearch", 330), ("sqlite", 180), ("aws", 2600),
    ("amazon web services", 940), ("azure", 1300), ("google cloud", 560),
    ("docker", 1200), ("kubernetes", 780), ("terraform", 340), ("jenkins", 560),
    ("git", 2400), ("github", 1100), ("ci/cd", 450), ("linux", 2200),
    ("unix", 900), ("windows server", 480), ("bash", 700), ("powershell", 520),
    ("networking", 1800), ("tcp/ip", 410), ("dns", 380), ("vpn", 320),
    ("firewalls", 450), ("cybersecurity", 760), ("penetration testing", 210),
    ("information security", 540), ("agile", 2800), ("scrum", 1900),
    ("kanban", 420), ("jira", 980), ("confluence", 460),
    ("project management", 3600), ("product management", 1100),
    ("program management", 520), ("risk management", 880),
    ("change management", 610), ("supply chain management", 470),
    ("inventory management", 620), ("vendor management", 380),
    ("time management", 1400), ("budgeting", 1300), ("forecasting", 820),
    ("financial analysis", 940), ("financial reporting", 760),
    ("financial modeling", 410), ("accounting", 2700), ("accounts payable", 690),
    ("accounts receivable", 650), ("bookkeeping", 560), ("payroll", 1100),
    ("auditing", 720), ("taxation", 430), ("quickbooks", 610), ("gaap", 340),
    ("recruiting", 1300), ("talent acquisition", 520), ("onboarding", 640),
    ("employee relations", 430), ("benefits administration", 290),
    ("performance management", 380), ("hris", 250),
    ("marketing", 4100), ("digital marketing", 1200), ("content marketing", 580),
    ("social media marketing", 640), ("social media", 2100), ("seo", 1300),
    ("sem", 410), ("ppc", 330), ("google ads", 370), ("copywriting", 520),
    ("content creation", 460), ("brand management", 310), ("public relations", 540),
    ("market research", 620), ("lead generation", 480), ("sales", 5200),
    ("business development", 1300), ("cold calling", 390), ("negotiation", 980),
    ("customer service", 4800), ("customer support", 1200),
    ("account management", 740), ("client relations", 410),
    ("communication", 6700), ("teamwork", 3900), ("leadership", 4200),
    ("problem solving", 3100), ("critical thinking", 1300),
    ("attention to detail", 1700), ("multitasking", 820),
    ("public speaking", 560), ("presentation skills", 480),
    ("team", 9900), ("knowledge", 9400), ("information", 8800),
    ("r&d", 520), ("research and development", 340), ("quality assurance", 980),
    ("quality control", 860), ("software testing", 520), ("unit testing", 340),
    ("test automation", 290), ("selenium", 310), ("debugging", 560),
    ("troubleshooting", 1600), ("technical support", 1200),
    ("help desk", 640), ("system administration", 520),
    ("database administration", 380), ("data warehousing", 290),
    ("etl", 470), ("rest apis", 520), ("microservices", 380),
    ("distributed systems", 290), ("object oriented programming", 410),
    ("functional programming", 130), ("web development", 980),
    ("mobile development", 420), ("ios", 680), ("android", 790),
    ("ui design", 380), ("ux design", 430), ("graphic design", 720),
    ("adobe photoshop", 560), ("adobe illustrator", 410), ("figma", 290),
    ("autocad", 480), ("solidworks", 280), ("cad", 640),
    ("nursing", 1900), ("patient care", 1400), ("phlebotomy", 320),
    ("medical terminology", 540), ("cpr", 680), ("first aid", 520),
    ("electronic medical records", 310), ("hipaa", 460),
    ("medication administration", 230), ("vital signs", 280),
    ("teaching", 1700), ("curriculum development", 380),
    ("lesson planning", 410), ("classroom management", 390),
    ("systems installations", 60), ("system installations", 45),
    ("systems installation", 38), ("system installing", 12),
    ("network installations", 28), ("food preparation", 480),
    ("food safety", 520), ("point of sale", 390), ("inventory control", 440),
    ("forklift operation", 310), ("warehouse operations", 360),
    ("shipping and receiving", 290), ("order fulfillment", 240),
    ("route planning", 130), ("fleet management", 110),
    ("contract negotiation", 320), ("legal research", 280),
    ("litigation support", 170), ("regulatory compliance", 450),
    ("due diligence", 230), ("obscureskill", 3), ("rare tool", 2),
    ("very rare framework", 1), ("scala programming", 85),
]


def write_skill_lexicon():
    lines = [f"{surface}, {count}" for surface, count in SKILL_LEXICON]
    (FIXTURES / "skill_lexicon.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"skill_lexicon.csv: {len(SKILL_LEXICON)} rows")


# ---------------------------------------------------------------------------
# Companies (30) + alias table
# ---------------------------------------------------------------------------

COMPANIES = [
    # Query-1 sweet spot: jquery tech, 50-200 employees, revenue > 1000 kUSD
    dict(domain="brightforge.com", name="BrightForge Software, Inc", employees=120,
         revenue_kusd=8500, industry="software", alexa_rank=10**4,
         micro={"digital marketing": 0.81, "developer tools": 0.64},
         tech=["jquery", "react", "aws", "postgresql"], social=12000,
         contacts=[("Dana Whitfield", "Technical Recruiter"),
                   ("Miguel Torres", "CTO"),
                   ("Priya Raman", "Software Engineer II")]),
    dict(domain="cloudmesa.io", name="CloudMesa Technologies LLC", employees=85,
         revenue_kusd=4200, industry="software", alexa_rank=52000,
         micro={"cloud infrastructure": 0.72},
         tech=["jquery", "kubernetes", "aws", "mongodb"], social=5400,
         contacts=[("Ana Sofia Vega", "HR Coordinator"),
                   ("Tom Keller", "VP of Engineering")]),
    dict(domain="quantleaf.com", name="QuantLeaf Analytics, Ltd", employees=160,
         revenue_kusd=12600, industry="software", alexa_rank=31000,
         micro={"data analytics": 0.88},
         tech=["jquery", "tableau", "mongodb", "python"], social=8800,
         contacts=[("Jordan Blake", "Director of Talent Acquisition"),
                   ("Wei Chen", "Engineering Manager")]),
    # Near-misses for Query-1
    dict(domain="gigaplex.com", name="GigaPlex Corp", employees=4800,
         revenue_kusd=260000, industry="software", alexa_rank=900,
         micro={"enterprise software": 0.77},
         tech=["jquery", "oracle", "sap"], social=210000,
         contacts=[("Sam Ortiz", "Chief Human Resources Officer"),
                   ("Lee Park", "Senior Software Engineer")]),
    dict(domain="pixelbarn.dev", name="PixelBarn Studios", employees=64,
         revenue_kusd=950, industry="software", alexa_rank=140000,
         micro={"creative tools": 0.55},
         tech=["jquery", "figma"], social=3100,
         contacts=[("Robin Vale", "Office Manager")]),
    dict(domain="nimbusworks.com", name="NimbusWorks, Inc", employees=150,
         revenue_kusd=7800, industry="software", alexa_rank=47000,
         micro={"cloud infrastructure": 0.66},
         tech=["react", "aws", "terraform"], social=9200,
         contacts=[("Casey Drummond", "Recruiter"),
                   ("Ravi Natarajan", "Director of Engineering")]),
    # Staffing services (analytics industry)
    dict(domain="talentspring.com", name="TalentSpring Staffing Group", employees=210,
         revenue_kusd=15800, industry="staffing services", alexa_rank=23000,
         micro={"recruitment": 0.91},
         tech=["salesforce", "marketo", "tableau"], social=18500,
         contacts=[("Morgan Ellis", "Talent Acquisition Specialist"),
                   ("Dee Alvarez", "VP of Sales")]),
    dict(domain="hirelane.com", name="HireLane LLC", employees=95,
         revenue_kusd=6100, industry="staffing services", alexa_rank=68000,
         micro={"recruitment": 0.83},
         tech=["salesforce", "hubspot", "jquery"], social=4700,
         contacts=[("Pat Quinn", "HR Generalist"),
                   ("Noel Brand", "Account Executive")]),
    dict(domain="crewfinder.net", name="CrewFinder Services", employees=47,
         revenue_kusd=2300, industry="staffing services", alexa_rank=155000,
         micro={"recruitment": 0.74},
         tech=["hubspot"], social=2100,
         contacts=[("Avery Stone", "Recruiter")]),
    # Health services
    dict(domain="mendwell.org", name="MendWell Health Services", employees=860,
         revenue_kusd=94000, industry="health services", alexa_rank=12000,
         micro={"patient care": 0.86},
         tech=["sap", "oracle", "tableau", "mongodb"], social=45000,
         contacts=[("Dr. Ingrid Hale", "Chief Medical Officer"),
                   ("Farah Osman", "Nurse Recruiter"),
                   ("Gloria Tan", "HR Coordinator")]),
    dict(domain="carebridgeclinics.com", name="CareBridge Clinics, Inc", employees=340,
         revenue_kusd=38000, industry="health services", alexa_rank=29000,
         micro={"patient care": 0.79},
         tech=["oracle", "salesforce"], social=16000,
         contacts=[("Omar Said", "Director of Nursing"),
                   ("June Park", "Medical Assistant")]),
    dict(domain="vitalpath.com", name="VitalPath Medical Group", employees=125,
         revenue_kusd=11400, industry="health services", alexa_rank=88000,
         micro={"patient care": 0.68, "telehealth": 0.41},
         tech=["jquery", "mysql"], social=6800,
         contacts=[("Quinn Harper", "Practice Manager")]),
    # Restaurant chain
    dict(domain="emberandoak.com", name="Ember & Oak Restaurants", employees=1900,
         revenue_kusd=125000, industry="restaurant chain", alexa_rank=54000,
         micro={"casual dining": 0.82},
         tech=["point of sale", "sap"], social=98000,
         contacts=[("Billie Nash", "Regional Manager"),
                   ("Hector Ruiz", "HR Coordinator")]),
    dict(domain="noodlecraft.com", name="NoodleCraft Kitchens LLC", employees=720,
         revenue_kusd=48000, industry="restaurant chain", alexa_rank=91000,
         micro={"fast casual": 0.77},
         tech=["point of sale", "jquery"], social=41000,
         contacts=[("Sky Lowell", "District Manager")]),
    dict(domain="brineandbarrel.com", name="Brine & Barrel Co", employees=430,
         revenue_kusd=27000, industry="restaurant chain", alexa_rank=130000,
         micro={"casual dining": 0.69},
         tech=["salesforce"], social=23000,
         contacts=[("Reese Calder", "General Manager")]),
    # Digital marketing micro-industry
    dict(domain="adcurrent.com", name="AdCurrent Media", employees=75,
         revenue_kusd=5600, industry="marketing services", alexa_rank=76000,
         micro={"digital marketing": 0.93},
         tech=["marketo", "hubspot", "google analytics", "jquery"], social=13500,
         contacts=[("Lena Forsythe", "VP of Marketing"),
                   ("Ty Marsh", "Recruiter")]),
    dict(domain="funnelsmiths.com", name="FunnelSmiths, LLC", employees=38,
         revenue_kusd=1900, industry="marketing services", alexa_rank=210000,
         micro={"digital marketing": 0.71},
         tech=["hubspot", "google analytics"], social=4200,
         contacts=[("Izzy Cortes", "Marketing Manager")]),
    # Finance
    dict(domain="ledgerpoint.com", name="LedgerPoint Financial", employees=260,
         revenue_kusd=31000, industry="financial services", alexa_rank=42000,
         micro={"accounting software": 0.58},
         tech=["oracle", "tableau", "sap"], social=19000,
         contacts=[("Georgia Flint", "CFO"), ("Max Idowu", "Senior Auditor")]),
    dict(domain="harborledger.com", name="Harbor Ledger Advisors", employees=52,
         revenue_kusd=3800, industry="financial services", alexa_rank=175000,
         micro={"wealth management": 0.63},
         tech=["salesforce", "excel"], social=2600,
         contacts=[("Remy Osei", "Managing Director")]),
    # Logistics
    dict(domain="swiftcrate.com", name="SwiftCrate Logistics, Inc", employees=1450,
         revenue_kusd=175000, industry="logistics", alexa_rank=15000,
         micro={"freight": 0.84},
         tech=["sap", "oracle", "tableau", "mongodb"], social=67000,
         contacts=[("Blake Munro", "Director of Operations"),
                   ("Sana Iqbal", "Talent Acquisition Specialist")]),
    dict(domain="portandparcel.com", name="Port & Parcel Shipping Co", employees=580,
         revenue_kusd=62000, industry="logistics", alexa_rank=83000,
         micro={"freight": 0.72},
         tech=["sap"], social=15000,
         contacts=[("Ash Riordan", "Warehouse Supervisor")]),
    # Education
    dict(domain="lumenacademy.org", name="Lumen Academy", employees=310,
         revenue_kusd=19000, industry="education", alexa_rank=97000,
         micro={"k12": 0.76},
         tech=["google analytics"], social=22000,
         contacts=[("Noor Haddad", "School Principal"),
                   ("Evan Sloane", "HR Coordinator")]),
    dict(domain="skillhutch.com", name="SkillHutch Learning, Inc", employees=88,
         revenue_kusd=5200, industry="education", alexa_rank=64000,
         micro={"online learning": 0.81},
         tech=["jquery", "react", "mongodb"], social=31000,
         contacts=[("Dara Levin", "Curriculum Director")]),
    # Retail / e-commerce
    dict(domain="novaretail.com", name="Nova Retail Group", employees=5200,
         revenue_kusd=410000, industry="retail", alexa_rank=3400,
         micro={"e-commerce": 0.69},
         tech=["jquery", "salesforce", "google analytics", "sap"], social=350000,
         contacts=[("Charlie Dupree", "Chief Executive Officer"),
                   ("Vera Lindqvist", "Store Manager")]),
    dict(domain="thimbleandthread.com", name="Thimble & Thread Boutique", employees=26,
         revenue_kusd=800, industry="retail", alexa_rank=480000,
         micro={"e-commerce": 0.47},
         tech=["shopify"], social=8900,
         contacts=[("Jo Winters", "Owner")]),
    # Manufacturing
    dict(domain="torquefab.com", name="TorqueFab Industries Ltd", employees=940,
         revenue_kusd=88000, industry="manufacturing", alexa_rank=190000,
         micro={"precision machining": 0.73},
         tech=["sap", "autocad", "solidworks"], social=7800,
         contacts=[("Gus Ferreira", "Plant Manager"),
                   ("Tessa Brandt", "HR Generalist")]),
    dict(domain="alloyarc.com", name="AlloyArc Manufacturing", employees=175,
         revenue_kusd=14500, industry="manufacturing", alexa_rank=260000,
         micro={"metal fabrication": 0.66},
         tech=["autocad", "jquery"], social=3400,
         contacts=[("Nicky Doyle", "Production Supervisor")]),
    # Legal
    dict(domain="aldermarch.com", name="Alder & March LLP", employees=140,
         revenue_kusd=22000, industry="legal services", alexa_rank=310000,
         micro={"corporate law": 0.71},
         tech=["microsoft office"], social=1900,
         contacts=[("Harlan Reyes", "Managing Partner"),
                   ("Svea Nilsson", "Paralegal")]),
    # No alexa rank / sparse attributes: exercises neutral factors
    dict(domain="stealthgrid.io", name="StealthGrid", employees=None,
         revenue_kusd=None, industry="software", alexa_rank=None,
         micro={},
         tech=["rust", "kubernetes"], social=None,
         contacts=[("Ariel Moss", "Founder")]),
    # Amazon stand-in for the alias-family invariant
    dict(domain="amazon.com", name="Amazon", employees=1500000,
         revenue_kusd=574000000, industry="retail", alexa_rank=12,
         micro={"e-commerce": 0.97, "cloud infrastructure": 0.92},
         tech=["aws", "jquery", "java"], social=9800000,
         contacts=[("Robin Chandra", "Senior Technical Recruiter")]),
]

EXTRA_ALIASES = [
    ("amazon web", "amazon.com"),
    ("amazon web services", "amazon.com"),
    ("amazonfresh", "amazon.com"),
    ("amazon fresh", "amazon.com"),
    ("amazon drive", "amazon.com"),
    ("amazon prime", "amazon.com"),
    ("amazon hvh", "amazon.com"),
    ("amazon logistics", "amazon.com"),
    ("amazon fulfillment", "amazon.com"),
    ("amazon dedc", "amazon.com"),
]


def write_companies():
    lines = []
    for c in COMPANIES:
        obj = {
            "domain": c["domain"],
            "employees": c["employees"],
            "revenue_kusd": c["revenue_kusd"],
            "industry": c["industry"],
            "micro_industries": c["micro"],
            "technographics": c["tech"],
            "alexa_rank": c["alexa_rank"],
            "social_followers": c["social"],
            "contacts": [{"name": n, "title_raw": t} for n, t in c["contacts"]],
        }
        lines.append(json.dumps(obj, sort_keys=True))
    (FIXTURES / "companies.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"companies.jsonl: {len(COMPANIES)} records")


def write_aliases():
    import sys

    sys.path.insert(0, str(ROOT / "src"))
    from skillgrep.companies import normalize_company_name

    lines = ["alias,domain"]
    for c in COMPANIES:
        alias = normalize_company_name(c["name"]).text
        lines.append(f"{alias},{c['domain']}")
    for alias, domain in EXTRA_ALIASES:
        lines.append(f"{alias},{domain}")
    (FIXTURES / "aliases.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"aliases.csv: {len(lines) - 1} rows")


# ---------------------------------------------------------------------------
# Postings (100)
# ---------------------------------------------------------------------------

# Messy name variants per domain, cycled through postings.
NAME_VARIANTS = {
    "brightforge.com": ["BrightForge Software, Inc", "BrightForge Software",
                        "The BrightForge Software Co"],
    "cloudmesa.io": ["CloudMesa Technologies LLC", "CloudMesa Technologies",
                     "CloudMesa Group"],
    "quantleaf.com": ["QuantLeaf Analytics, Ltd", "QuantLeaf Analytics",
                      "QuantLeaf Analytics Solutions"],
    "gigaplex.com": ["GigaPlex Corp", "GigaPlex"],
    "pixelbarn.dev": ["PixelBarn Studios"],
    "nimbusworks.com": ["NimbusWorks, Inc", "NimbusWorks"],
    "talentspring.com": ["TalentSpring Staffing Group", "TalentSpring Staffing"],
    "hirelane.com": ["HireLane LLC", "HireLane"],
    "crewfinder.net": ["CrewFinder Services", "CrewFinder"],
    "mendwell.org": ["MendWell Health Services", "MendWell Health"],
    "carebridgeclinics.com": ["CareBridge Clinics, Inc", "CareBridge Clinics"],
    "vitalpath.com": ["VitalPath Medical Group", "VitalPath Medical"],
    "emberandoak.com": ["Ember & Oak Restaurants", "Ember and Oak Restaurants"],
    "noodlecraft.com": ["NoodleCraft Kitchens LLC", "NoodleCraft Kitchens"],
    "brineandbarrel.com": ["Brine & Barrel Co", "Brine and Barrel"],
    "adcurrent.com": ["AdCurrent Media", "AdCurrent Media Group"],
    "funnelsmiths.com": ["FunnelSmiths, LLC", "FunnelSmiths"],
    "ledgerpoint.com": ["LedgerPoint Financial", "LedgerPoint Financial Services"],
    "harborledger.com": ["Harbor Ledger Advisors"],
    "swiftcrate.com": ["SwiftCrate Logistics, Inc", "SwiftCrate Logistics"],
    "portandparcel.com": ["Port & Parcel Shipping Co", "Port and Parcel Shipping"],
    "lumenacademy.org": ["Lumen Academy", "The Lumen Academy"],
    "skillhutch.com": ["SkillHutch Learning, Inc", "SkillHutch Learning"],
    "novaretail.com": ["Nova Retail Group", "Nova Retail"],
    "thimbleandthread.com": ["Thimble & Thread Boutique"],
    "torquefab.com": ["TorqueFab Industries Ltd", "TorqueFab Industries"],
    "alloyarc.com": ["AlloyArc Manufacturing", "AlloyArc Mfg"],
    "aldermarch.com": ["Alder & March LLP", "Alder and March"],
    "stealthgrid.io": ["StealthGrid"],
    "amazon.com": ["Amazon", "Amazon Web Services, Inc", "Amazon Fulfillment services"],
}

LOCATIONS = ["San Mateo, CA", "New York, NY", "Austin, TX", "Seattle, WA",
             "Chicago, IL", "Denver, CO", "Boston, MA", "Atlanta, GA", None]

SENTENCE_FILLER = [
    "Our team values knowledge sharing and clear information flow.",
    "You will join a fast growing organization with excellent benefits.",
    "We offer a collaborative environment and a competitive salary.",
    "The role reports to the department head and supports daily operations.",
    "Candidates should be comfortable in a fast paced setting.",
]

# Each job archetype: (title pool, skill-surface pool, degree phrases).
ARCHETYPES = {
    "software": (
        ["Software Engineer II", "Senior Software Engineer", "Software Developer",
         "Big Data Software Engineer", "Full Stack Developer", "Backend Developer",
         "VP of Engineering", "Engineering Manager", "DevOps Engineer Level 2"],
        ["python", "java", "scala", "javascript", "sql", "react", "jquery",
         "aws", "docker", "kubernetes", "git", "agile", "machine learning",
         "data analysis", "c++", "linux", "rest apis", "unit testing",
         "communication", "teamwork", "problem solving"],
        ["bachelor degree", "master degree"],
    ),
    "data": (
        ["Data Scientist", "Data Analyst II", "Machine Learning Engineer",
         "Data Engineer", "Analytics Manager"],
        ["python", "r", "sql", "machine learning", "statistics", "tableau",
         "data visualization", "apache spark", "hadoop", "deep learning",
         "data mining", "excel", "communication", "mongodb"],
        ["master degree", "bachelor degree"],
    ),
    "marketing": (
        ["Digital Marketing Specialist", "Marketing Manager", "SEO Specialist",
         "Content Strategist", "VP, Marketing", "Social Media Manager"],
        ["seo", "google analytics", "marketo", "hubspot", "email marketing",
         "e-mail marketing", "content marketing", "social media", "copywriting",
         "crm", "communication", "market research"],
        ["bachelor degree"],
    ),
    "sales": (
        ["Account Executive", "Sales Representative", "Business Development Representative",
         "Sales Manager", "Director of Sales"],
        ["sales", "crm", "salesforce", "cold calling", "negotiation",
         "lead generation", "customer service", "communication", "time management"],
        ["bachelor degree"],
    ),
    "finance": (
        ["Staff Accountant", "Financial Analyst II", "Senior Auditor",
         "Accounting Manager", "Controller", "CFO"],
        ["accounting", "excel", "quickbooks", "gaap", "financial analysis",
         "financial reporting", "auditing", "payroll", "budgeting",
         "attention to detail", "sap"],
        ["bachelor degree", "cpa certification"],
    ),
    "hr": (
        ["Technical Recruiter", "HR Generalist", "Talent Acquisition Specialist",
         "HR Coordinator", "Director of Talent Acquisition"],
        ["recruiting", "talent acquisition", "onboarding", "employee relations",
         "hris", "communication", "negotiation", "time management",
         "microsoft office"],
        ["bachelor degree"],
    ),
    "medical": (
        ["Registered Nurse", "Nurse Practitioner", "Medical Assistant",
         "Licensed Practical Nurse", "Director of Nursing", "Phlebotomist"],
        ["nursing", "patient care", "medical terminology", "cpr", "hipaa",
         "electronic medical records", "vital signs", "first aid",
         "medication administration", "communication"],
        ["associate degree", "bachelor degree"],
    ),
    "operations": (
        ["Operations Coordinator", "Warehouse Supervisor", "Logistics Coordinator",
         "Supply Chain Analyst", "General Manager", "Operations Manager"],
        ["inventory management", "forklift operation", "warehouse operations",
         "shipping and receiving", "supply chain management", "sap",
         "route planning", "time management", "teamwork", "excel"],
        ["high school diploma", "bachelor degree"],
    ),
    "restaurant": (
        ["Line Cook", "Restaurant Server", "Kitchen Manager", "Barista",
         "District Manager"],
        ["food preparation", "food safety", "customer service", "point of sale",
         "inventory control", "teamwork", "multitasking", "cash handling"],
        ["high school diploma"],
    ),
    "education": (
        ["Teacher", "Instructor", "Curriculum Developer", "Teaching Assistant",
         "School Principal"],
        ["teaching", "curriculum development", "lesson planning",
         "classroom management", "public speaking", "communication",
         "microsoft office"],
        ["bachelor degree", "master degree"],
    ),
    "legal": (
        ["Paralegal", "Legal Assistant", "Compliance Analyst", "Attorney",
         "Legal Counsel"],
        ["legal research", "litigation support", "contract negotiation",
         "regulatory compliance", "due diligence", "microsoft word",
         "attention to detail"],
        ["bachelor degree", "law degree"],
    ),
    "it_support": (
        ["IT Support Specialist", "Systems Administrator", "Help Desk Technician",
         "Network Engineer III", "Database Administrator"],
        ["troubleshooting", "technical support", "help desk", "linux",
         "windows server", "networking", "tcp/ip", "dns", "firewalls",
         "system administration", "sql", "e-mail"],
        ["associate degree", "bachelor degree"],
    ),
}

ARCHETYPE_FOR_INDUSTRY = {
    "software": ["software", "data", "it_support", "marketing", "sales", "hr"],
    "staffing services": ["hr", "sales", "operations", "software"],
    "health services": ["medical", "hr", "operations", "it_support"],
    "restaurant chain": ["restaurant", "operations", "marketing"],
    "marketing services": ["marketing", "sales", "data"],
    "financial services": ["finance", "data", "sales"],
    "logistics": ["operations", "it_support", "finance"],
    "education": ["education", "hr", "it_support"],
    "retail": ["sales", "marketing", "operations", "software"],
    "manufacturing": ["operations", "finance", "software"],
    "legal services": ["legal", "hr"],
}

# Hand-pinned postings that make the flagship conjunctive query non-trivial:
# three full matches, plus near-misses that each fail exactly one constraint.
PINNED = [
    dict(id="post-0001", domain="brightforge.com", title="Software Engineer II",
         skills=["python", "scala", "jquery", "sql", "git", "agile",
                 "machine learning", "communication"],
         degree="bachelor degree"),
    dict(id="post-0002", domain="cloudmesa.io", title="Big Data Software Engineer",
         skills=["python", "scala", "apache spark", "hadoop", "aws", "big data",
                 "data analysis", "teamwork"],
         degree="bachelor degree"),
    dict(id="post-0003", domain="quantleaf.com", title="Senior Software Engineer",
         skills=["python", "scala", "java", "sql", "mongodb", "docker",
                 "problem solving"],
         degree="bachelor degree"),
    # company fails employees range (4800)
    dict(id="post-0004", domain="gigaplex.com", title="Software Developer",
         skills=["python", "scala", "java", "sql", "oracle"],
         degree="bachelor degree"),
    # company fails revenue floor (950 kUSD)
    dict(id="post-0005", domain="pixelbarn.dev", title="Full Stack Developer",
         skills=["python", "scala", "javascript", "css", "html"],
         degree="bachelor degree"),
    # company lacks jquery technographic
    dict(id="post-0006", domain="nimbusworks.com", title="Backend Developer",
         skills=["python", "scala", "go", "kubernetes", "terraform"],
         degree="bachelor degree"),
    # posting lacks scala
    dict(id="post-0007", domain="brightforge.com", title="DevOps Engineer Level 2",
         skills=["python", "docker", "kubernetes", "jenkins", "linux", "bash"],
         degree="bachelor degree"),
    # posting lacks the degree phrase
    dict(id="post-0008", domain="cloudmesa.io", title="Software Engineer I",
         skills=["python", "scala", "react", "javascript", "git"],
         degree=None),
    # wrong department (marketing title), right skills/company
    dict(id="post-0009", domain="quantleaf.com", title="Marketing Analyst",
         skills=["python", "scala", "google analytics", "seo", "market research"],
         degree="bachelor degree"),
]


def _sentence_for(skills, degree):
    parts = []
    parts.append(
        "We are looking for a candidate with hands-on experience in "
        + ", ".join(skills[: max(1, len(skills) - 2)])
        + "."
    )
    if len(skills) > 2:
        parts.append(
            "Familiarity with " + " and ".join(skills[-2:]) + " is a strong plus."
        )
    if degree:
        parts.append(f"A {degree} or equivalent practical experience is required.")
    return " ".join(parts)


def write_postings():
    rng = random.Random(20260810)
    posting_rows = []
    used_ids = set()

    def add(pid, title, domain, skills, degree, filler_ix, loc_ix, date_ord):
        name_pool = NAME_VARIANTS[domain]
        company = name_pool[len(posting_rows) % len(name_pool)]
        desc = _sentence_for(skills, degree) + " " + SENTENCE_FILLER[filler_ix]
        row = {
            "id": pid,
            "title": title,
            "company": company,
            "description": desc,
            "location": LOCATIONS[loc_ix],
            "date_posted": f"2026-{(date_ord % 6) + 1:02d}-{(date_ord % 27) + 1:02d}",
        }
        if row["location"] is None:
            del row["location"]
        posting_rows.append(row)
        used_ids.add(pid)

    for i, p in enumerate(PINNED):
        add(p["id"], p["title"], p["domain"], p["skills"], p["degree"],
            filler_ix=i % len(SENTENCE_FILLER), loc_ix=i % len(LOCATIONS),
            date_ord=i)

    # Special-surface postings: exercise the paper-family normalizations.
    add("post-0010", "Email Marketing Specialist", "adcurrent.com",
        ["e-mail marketing", "email marketing", "marketo", "google analytics",
         "seo", "copywriting"], "bachelor degree", 0, 1, 9)
    add("post-0011", "Software Engineer", "brightforge.com",
        ["c#/.net", "c# & .net", "sql", "javascript", "jquery", "rest apis"],
        "bachelor degree", 1, 2, 10)
    add("post-0012", "Systems Administrator", "cloudmesa.io",
        ["systems installations", "linux", "networking", "troubleshooting",
         "e-mail", "dns"], "associate degree", 2, 3, 11)
    add("post-0013", "Research and Development Engineer", "torquefab.com",
        ["r&d", "autocad", "solidworks", "cad", "data analysis"],
        "master degree", 3, 4, 12)

    by_industry: dict[str, list[str]] = {}
    for c in COMPANIES:
        by_industry.setdefault(c["industry"], []).append(c["domain"])

    seq = 14
    domains_cycle = [c["domain"] for c in COMPANIES]
    while len(posting_rows) < 100:
        domain = domains_cycle[seq % len(domains_cycle)]
        industry = next(c["industry"] for c in COMPANIES if c["domain"] == domain)
        archetypes = ARCHETYPE_FOR_INDUSTRY.get(industry, ["operations"])
        arche = ARCHETYPES[archetypes[seq % len(archetypes)]]
        titles, skills_pool, degrees = arche
        title = titles[rng.randrange(len(titles))]
        k = rng.randrange(5, min(9, len(skills_pool)))
        skills = rng.sample(skills_pool, k)
        degree = degrees[rng.randrange(len(degrees))] if rng.random() < 0.8 else None
        add(f"post-{seq:04d}", title, domain, skills, degree,
            filler_ix=rng.randrange(len(SENTENCE_FILLER)),
            loc_ix=rng.randrange(len(LOCATIONS)), date_ord=seq)
        seq += 1

    lines = [json.dumps(row, sort_keys=True) for row in posting_rows]
    (FIXTURES / "postings.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"postings.jsonl: {len(posting_rows)} records")


def write_sample_lexicon_10():
    rows = [
        ("machine learning", 4120),
        ("e-mail", 2500),
        ("email", 3400),
        ("c#/.net", 280),
        ("c# & .net", 310),
        ("systems installations", 60),
        ("system installing", 12),
        ("team", 9900),
        ("python", 9200),
        ("r&d", 520),
    ]
    lines = [f"{s}, {c}" for s, c in rows]
    (FIXTURES / "sample_lexicon_10.csv").write_text(
        "\n".join(lines) + "\n", encoding="utf-8"
    )
    print("sample_lexicon_10.csv: 10 rows")


def main():
    FIXTURES.mkdir(exist_ok=True)
    write_taxonomy()
    write_skill_lexicon()
    write_companies()
    write_aliases()
    write_postings()
    write_sample_lexicon_10()


if __name__ == "__main__":
    main()
