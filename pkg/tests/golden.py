"""Quivers transcribed from the printed figures: (vertices, arrows) with the dotted tails left out."""

G_A3_VERTICES = [(2, 0), (1, -1), (3, -1), (2, -2), (1, -3), (3, -3), (2, -4), (1, -5), (3, -5)]
G_A3_ARROWS = [((1, -5), (1, -3)), ((1, -3), (1, -1)), ((1, -3), (2, -4)), ((1, -1), (2, -2)), ((2, -4), (1, -5)), ((2, -4), (2, -2)), ((2, -4), (3, -5)), ((2, -2), (1, -3)), ((2, -2), (2, 0)), ((2, -2), (3, -3)), ((2, 0), (1, -1)), ((2, 0), (3, -1)), ((3, -5), (3, -3)), ((3, -3), (2, -4)), ((3, -3), (3, -1)), ((3, -1), (2, -2))]

G_B2_VERTICES = [(2, 0), (1, -1), (2, -2), (1, -3), (2, -4), (1, -5), (2, -6), (1, -7), (2, -8), (1, -9), (2, -10), (1, -11), (2, -12)]
G_B2_ARROWS = [((1, -11), (1, -7)), ((1, -9), (1, -5)), ((1, -9), (2, -12)), ((1, -7), (1, -3)), ((1, -7), (2, -10)), ((1, -5), (1, -1)), ((1, -5), (2, -8)), ((1, -3), (2, -6)), ((1, -1), (2, -4)), ((2, -12), (2, -10)), ((2, -10), (1, -11)), ((2, -10), (2, -8)), ((2, -8), (1, -9)), ((2, -8), (2, -6)), ((2, -6), (1, -7)), ((2, -6), (2, -4)), ((2, -4), (1, -5)), ((2, -4), (2, -2)), ((2, -2), (1, -3)), ((2, -2), (2, 0)), ((2, 0), (1, -1))]

GAMMA_A3_VERTICES = [(2, -1), (1, -2), (3, -2), (2, -3), (1, -4), (3, -4), (2, -5), (1, -6), (3, -6)]
GAMMA_A3_ARROWS = [((1, -6), (1, -4)), ((1, -4), (1, -2)), ((1, -4), (2, -5)), ((1, -2), (2, -3)), ((2, -5), (1, -6)), ((2, -5), (2, -3)), ((2, -5), (3, -6)), ((2, -3), (1, -4)), ((2, -3), (2, -1)), ((2, -3), (3, -4)), ((2, -1), (1, -2)), ((2, -1), (3, -2)), ((3, -6), (3, -4)), ((3, -4), (2, -5)), ((3, -4), (3, -2)), ((3, -2), (2, -3))]

GAMMA_B2_VERTICES = [(2, -1), (1, -3), (2, -3), (1, -5), (2, -5), (1, -7), (2, -7), (1, -9), (2, -9), (1, -11), (2, -11), (1, -13), (2, -13)]
GAMMA_B2_ARROWS = [((1, -13), (1, -9)), ((1, -11), (1, -7)), ((1, -11), (2, -13)), ((1, -9), (1, -5)), ((1, -9), (2, -11)), ((1, -7), (1, -3)), ((1, -7), (2, -9)), ((1, -5), (2, -7)), ((1, -3), (2, -5)), ((2, -13), (2, -11)), ((2, -11), (1, -13)), ((2, -11), (2, -9)), ((2, -9), (1, -11)), ((2, -9), (2, -7)), ((2, -7), (1, -9)), ((2, -7), (2, -5)), ((2, -5), (1, -7)), ((2, -5), (2, -3)), ((2, -3), (1, -5)), ((2, -3), (2, -1)), ((2, -1), (1, -3))]

