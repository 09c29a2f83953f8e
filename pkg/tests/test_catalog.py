import pytest
from hypothesis import given
from hypothesis import strategies as st

from lightwalk import (
    CATALOG_HEADER,
    Catalog,
    CatalogParseError,
    CatalogValidationError,
    Species,
    embedded_table1,
    load_catalog,
    parse_catalog,
    serialize_catalog,
)

HEADER = CATALOG_HEADER + "\n"


def test_parse_single_line():
    text = HEADER + "Li-7,7.016004,2s 2S1/2 - 2p 2P0 1/2,670.7926\n"
    catalog = parse_catalog(text)
    assert len(catalog) == 1
    species = catalog.entries[0]
    assert species == Species("Li-7", 7.016004, "2s 2S1/2 - 2p 2P0 1/2", 670.7926)


def test_header_only_is_empty_catalog():
    catalog = parse_catalog(HEADER)
    assert len(catalog) == 0


def test_comments_and_blank_lines_ignored():
    text = "# leading comment\n\n" + HEADER + "\n# middle\nA-1,1.0,label,500.0\n\n"
    assert parse_catalog(text).names() == ("A-1",)


def test_missing_header_rejected():
    with pytest.raises(CatalogParseError) as err:
        parse_catalog("A-1,1.0,label,500.0\n")
    assert err.value.line == 1


def test_duplicate_name_reports_line():
    text = HEADER + "U-238,238.05,label,358.5\nU-238,238.05,label,358.5\n"
    with pytest.raises(CatalogValidationError) as err:
        parse_catalog(text)
    assert err.value.line == 3
    assert "U-238" in str(err.value)


def test_non_numeric_mass_reports_line_and_column():
    text = HEADER + "Li-7,abc,label,670.0\n"
    with pytest.raises(CatalogParseError) as err:
        parse_catalog(text)
    assert err.value.line == 2
    assert err.value.column == 6  # mass field starts after "Li-7,"


def test_wrong_field_count_rejected():
    with pytest.raises(CatalogParseError) as err:
        parse_catalog(HEADER + "Li-7,7.0,670.0\n")
    assert err.value.line == 2


@pytest.mark.parametrize("value", ["0", "-5.0", "inf", "nan"])
def test_nonpositive_or_nonfinite_wavelength_rejected(value):
    with pytest.raises(CatalogParseError):
        parse_catalog(HEADER + f"A-1,1.0,label,{value}\n")


def test_empty_name_rejected():
    with pytest.raises(CatalogParseError) as err:
        parse_catalog(HEADER + " ,1.0,label,500.0\n")
    assert err.value.column == 1


def test_embedded_table_shape():
    catalog = embedded_table1()
    assert len(catalog) == 24
    assert catalog.source_tag == "table1-embedded"
    cs = catalog.get("Cs-133")
    assert cs.mass_u == 132.905429
    assert cs.wavelength_nm == 852.113
    magnesium = [catalog.get(n) for n in ("Mg-24", "Mg-25", "Mg-26")]
    assert {sp.wavelength_nm for sp in magnesium} == {285.21251}
    assert catalog.names()[0] == "Li-7"
    assert catalog.names()[-1] == "U-238"


def test_embedded_round_trip_is_exact():
    catalog = embedded_table1()
    again = parse_catalog(serialize_catalog(catalog))
    assert again.entries == catalog.entries


def test_serialize_empty_catalog():
    empty = Catalog(entries=(), source_tag="x")
    assert serialize_catalog(empty) == HEADER
    assert parse_catalog(serialize_catalog(empty)).entries == ()


def test_unknown_name_lookup():
    with pytest.raises(KeyError):
        embedded_table1().get("Xx-999")


def test_load_catalog_from_file(tmp_path):
    path = tmp_path / "species.csv"
    path.write_text(serialize_catalog(embedded_table1()), encoding="utf-8")
    catalog = load_catalog(str(path))
    assert catalog.entries == embedded_table1().entries
    assert catalog.source_tag == str(path)


_names = st.from_regex(r"[A-Za-z][A-Za-z0-9_+\-]{0,10}", fullmatch=True)
_numbers = st.floats(min_value=1e-9, max_value=1e9, allow_nan=False, allow_infinity=False)
_labels = st.text(
    alphabet="abcdefgSPDF0123456789 []()/-", max_size=24
).map(str.strip)
_species = st.builds(Species, name=_names, mass_u=_numbers, transition=_labels,
                     wavelength_nm=_numbers)
_catalogs = st.lists(_species, max_size=8, unique_by=lambda sp: sp.name).map(
    lambda entries: Catalog(tuple(entries), source_tag="fuzz")
)


@given(_catalogs)
def test_round_trip_property(catalog):
    assert parse_catalog(serialize_catalog(catalog)).entries == catalog.entries
