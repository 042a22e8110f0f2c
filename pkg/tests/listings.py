"""Published polynomial listings, transcribed by hand.

Underlines marking negative terms are dropped; signs are kept.
"""

PHI_LISTED = {
    (4, 0): "c^4+2dc^2+2cdc",
    (4, 1): "dc^2+2cdc+c^2d+d^2",
    (5, 0): "c^5+3dc^3+5cdc^2+3c^2dc+4d^2c",
    (5, 1): "c^3d + 3c^2dc + 3cdc^2 + 2cd^2 + dc^3 + 2dcd + 4d^2c",
    (5, 2): "c^3d + 2c^2dc + cdc^2 + 4cd^2 + 3dcd + 3d^2c",
    (5, 3): "c^3d + c^2dc + 4cd^2 + 3dcd + d^2c",
    (5, 4): "c^3d + 2cd^2 + 2dcd",
    (6, 1): "c^4d + 4c^3dc + 6c^2dc^2 + 3c^2d^2 + 4cdc^3 + 5cdcd + 12cd^2c + dc^4 + 3dc^2d + 10dcdc + 8d^2c^2 + 4d^3",
    (6, 2): "c^4d + 3c^3dc + 3c^2dc^2 + 6c^2d^2 + cdc^3 + 8cdcd + 10cd^2c + 4dc^2d + 8dcdc + 4d^2c^2 + 8d^3",
    (6, 3): "c^4d + 2c^3dc + c^2dc^2 + 7c^2d^2 + 9cdcd + 6cd^2c + 4dc^2d + 5dcdc + d^2c^2 + 10d^3",
    (6, 4): "c^4d + c^3dc + 6c^2d^2 + 8cdcd + 2cd^2c + 4dc^2d + 2dcdc + 8d^3",
    (6, 5): "c^4d + 3c^2d^2 + 5cdcd + 3dc^2d + 4d^3",
}

P_LISTED = {
    (2, 0): "c^2-2d",
    (2, 1): "2d",
    (3, 0): "c^3 - 2dc",
    (3, 1): "3dc",
    (3, 2): "3cd",
    (4, 0): "c^4 - 2c^2d - 2dc^2 + 4d^2",
    (4, 1): "2c^2d + 2cdc + 4dc^2 - 4d^2",
    (4, 2): "2c^2d + 6cdc + 8d^2",
    (4, 3): "4c^2d + 4d^2",
    (5, 0): "c^5 - 2c^2dc - 2dc^3 + 4d^2c",
    (5, 1): "5c^2dc + 5cdc^2 + 5dc^3",
    (5, 2): "5c^3d + 10c^2dc + 10cdc^2 + 10cd^2 + 10dcd + 20d^2c",
    (5, 3): "5c^3d + 10c^2dc + 30cd^2 + 20dcd + 10d^2c",
    (5, 4): "5c^3d + 10cd^2 + 10dcd",
    (6, 0): "c^6 - 2c^4d - 2c^2dc^2 + 4c^2d^2 - 2dc^4 + 4dc^2d + 4d^2c^2 - 8d^3",
    (6, 1): "2c^4d + 4c^3dc + 11c^2dc^2 - 4c^2d^2 + 9cdc^3 + 12cd^2c + 6dc^4 - 4dc^2d + 10dcdc + 8d^2c^2 + 8d^3",
    (6, 2): "4c^4d + 20c^3dc + 25c^2dc^2 + 22c^2d^2 + 15cdc^3 + 30cdcd + 60cd^2c + 22dc^2d + 50dcdc + 40d^2c^2 + 16d^3",
    (6, 3): "11c^4d + 25c^3dc + 20c^2dc^2 + 68c^2d^2 + 90cdcd + 90cd^2c + 38dc^2d + 70dcdc + 20d^2c^2 + 104d^3",
    (6, 4): "9c^4d + 15c^3dc + 72c^2d^2 + 90cdcd + 30cd^2c + 42dc^2d + 30dcdc + 96d^3",
    (6, 5): "6c^4d + 18c^2d^2 + 30cdcd + 18dc^2d + 24d^3",
}

# the h-linear cd-index rows for n = 3..6, transcribed as printed
TABLE_ROWS = {
3: r"h_0c^3+(h_1+h_2)cd+(h_0+h_1)dc",
4: r"h_0c^4+(h_1+h_2+h_3)c^2d+(2h_0+2h_1+h_2)cdc+(h_0+h_1)dc^2+(h_1+2h_2+h_3)d^2",
5: r"h_0c^5+(h_1+h_2+h_3+h_4)c^4d+(3h_0+3h_1+2h_2+h_3)c^2dc+(5h_0+3h_1+h_2)cdc^2+(3h_0+h_1)dc^3+(2h_1+4h_2+4h_3+2h_4)cd^2+(2h_1+3h_2+3h_3+2h_4)dcd+(4h_0+4h_1+3h_2+h_3)d^2c",
6: r"h_0c^6+(h_1+h_2+h_3+h_4+h_5)c^4d+(4h_0+4h_1+3h_2+2h_3+h_4)c^3dc+(9h_0+6h_1+3h_2+h_3)c^2dc^2+(9h_0+4h_1+h_2)cdc^3+(4h_0+h_1)dc^4+(3h_1+6h_2+7h_3+6h_4+3h_5)c^2d^2+(5h_1+8h_2+9h_3+8h_4+5h_5)cdcd+(3h_1+4h_2+4h_3+4h_4+3h_5)dc^2d+(12h_0+12h_1+10h_2+6h_3+2h_4)cd^2c+(10h_0+10h_1+8h_2+5h_3+2h_4)dcdc+(12h_0+8h_1+4h_2+h_3)d^2c^2+(4h_1+8h_2+10h_3+8h_4+4h_5)d^3",
}
