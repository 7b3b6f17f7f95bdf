"""Values of the reference a- and b-tables (rows = m, columns = n)."""

A_TABLE = {
    (0, 0): "1", (0, 1): "1", (0, 2): "1", (0, 3): "1", (0, 4): "1",
    (1, 0): "q - q^2",
    (1, 1): "q + q^2 - 2q^3",
    (1, 2): "q + q^2 + q^3 - 3q^4",
    (1, 3): "q + q^2 + q^3 + q^4 - 4q^5",
    (2, 0): "q^3 - q^4 - q^6 + q^7",
    (2, 1): "q^3 + q^4 - q^5 - q^6 - q^7 - 2q^8 + 3q^9",
    (2, 2): "q^3 + q^4 + 2q^5 - 2q^6 - q^7 - 2q^8 - 2q^9 - 3q^10 + 6q^11",
    (3, 0): "q^6 - q^7 - q^9 + q^10 - q^11 + q^12 + q^14 - q^15",
    (3, 1): "q^6 + q^7 - q^8 - 2q^10 - 2q^11 + q^12 + 2q^15 + q^16 + 3q^17 - 4q^18",
    (4, 0): "q^10 - q^11 - q^13 + q^14 - q^15 + q^16 - q^17 + 2q^18 - q^19 + q^20"
            " - q^21 + q^22 - q^23 - q^25 + q^26",
}

B_TABLE = {
    (0, 0): "1", (0, 1): "1", (0, 2): "1", (0, 3): "1", (0, 4): "1",
    (1, 0): "1",
    (1, 1): "1 + 2q",
    (1, 2): "1 + 2q + 3q^2",
    (1, 3): "1 + 2q + 3q^2 + 4q^3",
    (2, 0): "1 + q + q^2",
    (2, 1): "1 + 3q + 4q^2 + 4q^3 + 3q^4",
    (2, 2): "1 + 3q + 7q^2 + 9q^3 + 10q^4 + 9q^5 + 6q^6",
    (3, 0): "1 + 2q + 3q^2 + 3q^3 + 3q^4 + 2q^5 + q^6",
    (3, 1): "1 + 4q + 8q^2 + 13q^3 + 17q^4 + 18q^5 + 17q^6 + 14q^7 + 9q^8 + 4q^9",
    (4, 0): "1 + 3q + 6q^2 + 9q^3 + 12q^4 + 14q^5 + 15q^6 + 14q^7 + 12q^8 + 9q^9"
            " + 6q^10 + 3q^11 + q^12",
}
