"""Parses an SVG written by `markoff render` and checks its cells."""
import sys
import xml.etree.ElementTree as ET

NS = "{http://www.w3.org/2000/svg}"


def main(path, *expected_counts):
    root = ET.parse(path).getroot()
    diagrams = [g for g in root.iter(NS + "g") if g.get("class") == "diagram"]
    counts = []
    for d in diagrams:
        cells = [g for g in d.iter(NS + "g") if g.get("class") == "cell"]
        for cell in cells:
            text = cell.find(NS + "text")
            if text is None or not text.text or not text.text.isdigit() or int(text.text) < 1:
                sys.exit(f"cell {cell.attrib} has no positive label")
        counts.append(len(cells))
    if counts != [int(c) for c in expected_counts]:
        sys.exit(f"cell counts {counts}, expected {list(expected_counts)}")
    print(f"{len(diagrams)} diagrams, cell counts {counts}")


if __name__ == "__main__":
    main(*sys.argv[1:])
