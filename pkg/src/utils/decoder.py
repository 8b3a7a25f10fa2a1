""" Stream Decoder and Document Codecs """

import csv
import io
import json
import os
from fractions import Fraction

import jsonschema
import yaml

from controller.base import DegenSequenceTable, Family, Method
from controller.identities import IdentityId, IndexResult, VerificationReport
from model import BivarPoly

with open(os.path.join(os.path.dirname(__file__), "schemas.json"), "rb") as file:
    SCHEMAS = json.load(file)

# -------------
#  Conversion
# -------------

TYPE_ERR = "Expect a serialization of a mapping type."


def to_yaml(stream):
    try:
        data = yaml.load(stream, Loader=yaml.SafeLoader)
    except (yaml.scanner.ScannerError, yaml.parser.ParserError) as err:
        raise ValueError(str(err)) from err
    if not isinstance(data, dict):
        raise TypeError(TYPE_ERR)
    return data


def to_json(stream):
    try:
        data = json.loads(stream)
    except json.JSONDecodeError as err:
        raise ValueError(str(err)) from err
    if not isinstance(data, dict):
        raise TypeError(TYPE_ERR)
    return data


def to_dict(stream, ext=None):
    """
    Load a string or bytes to a dict.
    If extension is specified, only parse
    stream as the specified format.
    """

    ext = ext.lower().lstrip(".") if isinstance(ext, str) else ""

    if "json" in ext:
        return to_json(stream)
    if ext in ("yaml", "yml"):
        return to_yaml(stream)

    # brute force, JSON is a subset of YAML
    return to_yaml(stream)


def validate(doc, kind):
    """
    Validate a document against one of the schemas
    in schemas.json, raise ValueError on failure.
    """
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as err:
        raise ValueError(f"Failed {kind} validation at {list(err.path)} - {err.message}.") from err


def dumps(doc):
    """Deterministic JSON text, one trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -------------
#  Polynomials
# -------------


def poly_to_dict(poly):
    terms = []
    for (deg_lambda, deg_x), coeff in BivarPoly.coerce(poly).terms.items():
        terms.append(
            {
                "dl": deg_lambda,
                "dx": deg_x,
                "num": str(coeff.numerator),
                "den": str(coeff.denominator),
            }
        )
    return {"terms": terms}


def poly_from_dict(doc):
    validate(doc, "poly")
    terms = {}
    for term in doc["terms"]:
        key = (term["dl"], term["dx"])
        if key in terms:
            raise ValueError(f"Repeated term λ^{key[0]} x^{key[1]}.")
        terms[key] = Fraction(int(term["num"]), int(term["den"]))
    return BivarPoly(terms)


# -------------
#  Tables
# -------------


def _value_to_doc(family, value):
    if family.integral:
        return str(int(value))
    return poly_to_dict(value)


def _value_from_doc(family, doc):
    if family.integral:
        if not isinstance(doc, str):
            raise ValueError(f"Family {family.value!r} holds integers.")
        return int(doc)
    return poly_from_dict(doc)


def table_to_dict(table):
    family = table.family
    if family.triangular:
        values = [[_value_to_doc(family, value) for value in row] for row in table.values]
    else:
        values = [_value_to_doc(family, value) for value in table.values]
    return {
        "family": family.value,
        "method": table.method.value,
        "from": table.start,
        "to": table.stop,
        "values": values,
    }


def table_from_dict(doc):
    validate(doc, "table")
    family = Family.parse(doc["family"])
    if family.triangular:
        values = [[_value_from_doc(family, value) for value in row] for row in doc["values"]]
    else:
        values = [_value_from_doc(family, value) for value in doc["values"]]
    table = DegenSequenceTable(family, Method(doc["method"]), doc["from"], values)
    if table.stop != doc["to"]:
        raise ValueError(f"Table claims indices {doc['from']}..{doc['to']} but holds {len(values)} values.")
    return table


def _render(value):
    return str(value)


def table_to_csv(table):
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    if table.family.triangular:
        # rows n, columns k, cells with k > n left empty
        width = table.stop + 1
        writer.writerow(["n", *range(width)])
        for n, row in table:
            cells = [_render(value) for value in row]
            writer.writerow([n, *cells, *[""] * (width - len(cells))])
    else:
        writer.writerow(["n", "value"])
        for n, value in table:
            writer.writerow([n, _render(value)])
    return buffer.getvalue()


# -------------
#  Reports
# -------------


def report_to_dict(report):
    doc = {
        "identity": report.identity.name,
        "results": [
            {
                "n": result.n,
                "pass": result.passed,
                "residual": None if result.passed else poly_to_dict(result.residual),
            }
            for result in report.results
        ],
        "allPass": report.all_pass,
    }
    if report.error is not None:
        doc["error"] = report.error
    return doc


def report_from_dict(doc):
    validate(doc, "report")
    try:
        identity = IdentityId[doc["identity"]]
    except KeyError as err:
        raise ValueError(f"Unknown identity {doc['identity']!r}.") from err
    results = []
    for result in doc["results"]:
        residual = BivarPoly.zero() if result["residual"] is None else poly_from_dict(result["residual"])
        if result["pass"] != residual.is_zero():
            raise ValueError(f"Pass flag disagrees with the residual at n={result['n']}.")
        results.append(IndexResult(result["n"], residual))
    return VerificationReport(identity, tuple(results), doc.get("error"))


def reports_to_csv(reports):
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["identity", "n", "pass", "residual"])
    for report in reports:
        if report.error is not None:
            writer.writerow([report.identity.name, "", "false", report.error])
        for result in report.results:
            writer.writerow(
                [report.identity.name, result.n, "true" if result.passed else "false", _render(result.residual)]
            )
    return buffer.getvalue()


def batch_to_dict(reports):
    reports = list(reports)
    return {
        "reports": [report_to_dict(report) for report in reports],
        "allPass": all(report.all_pass for report in reports),
    }


def batch_from_dict(doc):
    validate(doc, "batch")
    return [report_from_dict(report) for report in doc["reports"]]
