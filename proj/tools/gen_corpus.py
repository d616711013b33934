#!/usr/bin/env python3
# Copyright 2026 The resumeann Authors.
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

"""Generates the synthetic resume corpus and its gold annotations.

Every resume is assembled from fragments, some of which are tagged with an
ontology class. The gold file lists exactly the tagged fragments, with
offsets counted in code points as the document is concatenated, so the gold
does not depend on the annotator in any way. Surface forms are drawn from the
instance labels and variants of the ontology, with case and accent variation,
and from hand-written date, phone, fax and e-mail formats.

Output is deterministic for a given seed:

    tools/gen_corpus.py --count 30 --seed 2026 --out data
"""

import argparse
import os
import random
import re
import unicodedata

INSTANCE_RE = re.compile(r'^instance\s+(\w+)\s+"([^"]*)"\s*(?:\[(.*)\])?\s*$')


def load_instances(path):
    by_class = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            m = INSTANCE_RE.match(line.strip())
            if not m:
                continue
            forms = [m.group(2)]
            if m.group(3):
                forms += re.findall(r'"([^"]*)"', m.group(3))
            by_class.setdefault(m.group(1), []).append(forms)
    return by_class


def strip_accents(s):
    return "".join(c for c in unicodedata.normalize("NFD", s)
                   if not unicodedata.combining(c))


class Resume:
    """Concatenates text while recording gold spans."""

    def __init__(self):
        self.parts = []
        self.length = 0
        self.gold = []

    def text(self, s):
        self.parts.append(s)
        self.length += len(s)

    def tag(self, cls, s):
        self.gold.append((self.length, self.length + len(s), cls, s))
        self.text(s)

    def document(self):
        return "".join(self.parts)


class Generator:
    def __init__(self, instances, rng):
        self.instances = instances
        self.rng = rng

    def surface(self, cls, exclude=()):
        entries = [e for e in self.instances[cls] if e[0] not in exclude]
        entry = self.rng.choice(entries)
        form = self.rng.choice(entry)
        style = self.rng.random()
        if style < 0.15:
            form = form.upper()
        elif style < 0.25:
            form = strip_accents(form)
        elif style < 0.4 and form[:1].islower():
            form = form[:1].upper() + form[1:]
        return entry[0], form

    def distinct(self, cls, k):
        seen, out = set(), []
        while len(out) < k:
            label, form = self.surface(cls, exclude=seen)
            seen.add(label)
            out.append(form)
        return out

    def date(self, english):
        r = self.rng
        d, m, y = r.randint(1, 28), r.randint(1, 12), r.randint(1995, 2024)
        fr = ["janvier", "février", "mars", "avril", "mai", "juin", "juillet",
              "août", "septembre", "octobre", "novembre", "décembre"]
        en = ["January", "February", "March", "April", "May", "June", "July",
              "August", "September", "October", "November", "December"]
        forms = [
            f"{d:02d}/{m:02d}/{y}",
            f"{d:02d}.{m:02d}.{y}",
            f"{d:02d}-{m:02d}-{y}",
            f"{y}-{m:02d}-{d:02d}",
        ]
        if english:
            forms += [f"{en[m - 1]} {d}, {y}", f"{en[m - 1]} {y}",
                      f"{d} {en[m - 1]} {y}"]
        else:
            forms += [f"{d} {fr[m - 1]} {y}", f"{fr[m - 1]} {y}",
                      f"1er {fr[m - 1]} {y}"]
        return r.choice(forms)

    def birth_date(self):
        d, m = self.rng.randint(1, 28), self.rng.randint(1, 12)
        return f"{d:02d}/{m:02d}/{self.rng.randint(1960, 2000)}"

    def phone(self):
        r = self.rng
        n = [r.randint(20, 99)] + [r.randint(100, 999), r.randint(100, 999)]
        forms = [
            f"+216 {n[0]} {n[1]} {n[2]}",
            f"{n[0]} {n[1]} {n[2]}",
            f"(+216) {n[0]}.{n[1]}.{n[2]}",
            f"{n[0]}{n[1]}{n[2]}",
            f"+33 1 {n[0]} {n[1] % 100:02d} {n[2] % 100:02d} {r.randint(10, 99)}",
        ]
        return r.choice(forms)

    def email(self, first, last):
        local = strip_accents(f"{first}.{last}").lower().replace(" ", "")
        domain = self.rng.choice(["gmail.com", "yahoo.fr", "topnet.tn",
                                  "planet.tn", "example.org"])
        return f"{local}{self.rng.randint(1, 99)}@{domain}"


def french_resume(g):
    r = Resume()
    first, last = g.surface("Name")[1], g.surface("Name")[1]
    r.text("CURRICULUM VITAE\n\nNom : ")
    r.tag("Name", last)
    r.text("\nPrénom : ")
    r.tag("Name", first)
    r.text("\nSexe : ")
    r.tag("Gender", g.surface("Gender")[1])
    r.text("\nDate de naissance : ")
    r.tag("Date", g.birth_date())
    r.text("\nNationalité : ")
    r.tag("Nationality", g.surface("Nationality")[1])
    r.text("\nAdresse : 12, ")
    r.tag("Address", g.surface("Address")[1])
    r.text("\nTél : ")
    r.tag("Phone", g.phone())
    if g.rng.random() < 0.5:
        r.text(" / Fax : ")
    else:
        r.text("\nFax : ")
    r.tag("Fax", g.phone())
    r.text("\nE-mail : ")
    r.tag("Email", g.email(first, last))
    r.text("\n\nEXPÉRIENCE PROFESSIONNELLE\n")
    for _ in range(g.rng.randint(1, 3)):
        r.text("Depuis ")
        r.tag("Date", g.date(False))
        r.text(" : ")
        r.tag("Occupation", g.surface("Occupation")[1])
        r.text(" chez Société Alpha, ")
        r.tag("Address", g.surface("Address")[1])
        r.text(".\n")
    r.text("\nFORMATION\n")
    for _ in range(g.rng.randint(1, 2)):
        r.tag("Date", g.date(False))
        r.text(" : ")
        r.tag("Training", g.surface("Training")[1])
        r.text(" obtenu à l'")
        r.tag("Institute", g.surface("Institute")[1])
        r.text(".\n")
    r.text("\nLANGUES\n")
    a, b = g.distinct("Language", 2)
    r.tag("Language", a)
    r.text(" : courant ; ")
    r.tag("Language", b)
    r.text(" : bon niveau.\n\nCOMPÉTENCES\n")
    c1, c2 = g.distinct("Competency", 2)
    r.tag("Competency", c1)
    r.text(", ")
    r.tag("Competency", c2)
    r.text(".\nInformatique : ")
    k1, k2 = g.distinct("ComputerSkill", 2)
    r.tag("ComputerSkill", k1)
    r.text(", ")
    r.tag("ComputerSkill", k2)
    r.text(".\n")
    r.tag("SocialSkill", g.surface("SocialSkill")[1])
    r.text(" ; ")
    r.tag("OrganisationalSkill", g.surface("OrganisationalSkill")[1])
    r.text(".\n\nLOISIRS\n")
    r.tag("ArtisticSkill", g.surface("ArtisticSkill")[1])
    r.text(", ")
    r.tag("OtherSkill", g.surface("OtherSkill")[1])
    r.text(".\n")
    r.tag("DrivingLicence", g.surface("DrivingLicence")[1])
    r.text(".\n")
    return r


def english_resume(g):
    r = Resume()
    first, last = g.surface("Name")[1], g.surface("Name")[1]
    r.text("RESUME\n\nName: ")
    r.tag("Name", first)
    r.text(" ")
    r.tag("Name", last)
    r.text("\nGender: ")
    r.tag("Gender", g.surface("Gender")[1])
    r.text("\nDate of birth: ")
    r.tag("Date", g.birth_date())
    r.text("\nNationality: ")
    r.tag("Nationality", g.surface("Nationality")[1])
    r.text("\nAddress: 7 ")
    r.tag("Address", g.surface("Address")[1])
    r.text("\nMobile: ")
    r.tag("Phone", g.phone())
    r.text("\nFax: ")
    r.tag("Fax", g.phone())
    r.text("\nEmail: ")
    r.tag("Email", g.email(first, last))
    r.text("\n\nWORK EXPERIENCE\n")
    for _ in range(g.rng.randint(1, 3)):
        r.tag("Date", g.date(True))
        r.text(" - present: ")
        r.tag("Occupation", g.surface("Occupation")[1])
        r.text(", Beta Consulting, ")
        r.tag("Address", g.surface("Address")[1])
        r.text(".\n")
    r.text("\nEDUCATION\n")
    for _ in range(g.rng.randint(1, 2)):
        r.tag("Date", g.date(True))
        r.text(": ")
        r.tag("Training", g.surface("Training")[1])
        r.text(", ")
        r.tag("Institute", g.surface("Institute")[1])
        r.text(".\n")
    r.text("\nLANGUAGES\n")
    a, b = g.distinct("Language", 2)
    r.tag("Language", a)
    r.text(" (fluent), ")
    r.tag("Language", b)
    r.text(" (good).\n\nSKILLS\n")
    c1, c2 = g.distinct("Competency", 2)
    r.tag("Competency", c1)
    r.text("; ")
    r.tag("Competency", c2)
    r.text("; ")
    r.tag("ComputerSkill", g.surface("ComputerSkill")[1])
    r.text(".\n")
    r.tag("SocialSkill", g.surface("SocialSkill")[1])
    r.text(", ")
    r.tag("OrganisationalSkill", g.surface("OrganisationalSkill")[1])
    r.text(".\n\nINTERESTS\n")
    r.tag("ArtisticSkill", g.surface("ArtisticSkill")[1])
    r.text("; ")
    r.tag("OtherSkill", g.surface("OtherSkill")[1])
    r.text(".\n")
    r.tag("DrivingLicence", g.surface("DrivingLicence")[1])
    r.text(".\n")
    return r


def escape(s):
    return (s.replace("\\", "\\\\").replace("\t", "\\t")
            .replace("\n", "\\n").replace("\r", "\\r"))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=30)
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--ontology", default=None)
    parser.add_argument("--out", default="data")
    args = parser.parse_args()

    ontology = args.ontology or os.path.join(args.out, "ontology", "ereco.onto")
    g = Generator(load_instances(ontology), random.Random(args.seed))
    corpus_dir = os.path.join(args.out, "corpus")
    gold_dir = os.path.join(args.out, "gold")
    os.makedirs(corpus_dir, exist_ok=True)
    os.makedirs(gold_dir, exist_ok=True)

    for i in range(args.count):
        r = english_resume(g) if i % 3 == 2 else french_resume(g)
        doc = r.document()
        for start, end, cls, s in r.gold:
            assert doc[start:end] == s, (i, start, end, s)
        name = f"cv{i + 1:03d}"
        with open(os.path.join(corpus_dir, name + ".txt"), "w",
                  encoding="utf-8", newline="\n") as f:
            f.write(doc)
        with open(os.path.join(gold_dir, name + ".ann"), "w",
                  encoding="utf-8", newline="\n") as f:
            for start, end, cls, s in sorted(r.gold):
                f.write(f"{start}\t{end}\t{cls}\t{escape(s)}\n")


if __name__ == "__main__":
    main()
