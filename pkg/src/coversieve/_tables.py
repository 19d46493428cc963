"""Embedded appendix tables: the two coverings (with per-block prime
indexes), the per-modulus prime budgets L(b) and leftovers M(b), and the
eleven classes resolving the slice 2 (mod 8).

Counts: 447 Sierpinski classes, 459 Riesel classes.
Entries are (residue, modulus, index) -- the index restarts at 1 inside
each contiguous same-modulus block, matching the source tables.
Generated data; edit the loaders in dataset.py, not this file.
"""

SIERPINSKI = (
    (0, 4, 1), (2, 16, 1), (6, 32, 1), (22, 64, 1), (54, 64, 2), (10, 48, 1),
    (26, 96, 1), (74, 288, 1), (170, 288, 2), (266, 288, 3), (42, 144, 1), (90, 144, 2),
    (138, 432, 1), (282, 432, 2), (426, 432, 3), (14, 112, 1), (30, 112, 2), (46, 224, 1),
    (158, 224, 2), (62, 336, 1), (174, 336, 2), (286, 336, 3), (78, 448, 1), (190, 448, 2),
    (302, 896, 1), (750, 896, 2), (414, 1792, 1), (862, 1792, 2), (1310, 1792, 3), (1758, 1792, 4),
    (94, 672, 1), (206, 672, 2), (318, 1344, 1), (990, 1344, 2), (430, 1344, 3), (1102, 1344, 4),
    (542, 2016, 1), (1214, 2016, 2), (1886, 2016, 3), (654, 3360, 1), (1326, 3360, 2), (1998, 3360, 3),
    (2670, 3360, 4), (3342, 3360, 5), (110, 784, 1), (222, 784, 2), (334, 784, 3), (446, 784, 4),
    (558, 784, 5), (670, 1568, 1), (1454, 1568, 2), (782, 3136, 1), (1566, 3136, 2), (2350, 3136, 3),
    (3134, 3136, 4), (0, 13, 1), (1, 26, 1), (2, 39, 1), (15, 117, 1), (54, 117, 2),
    (93, 117, 3), (28, 117, 4), (67, 351, 1), (184, 351, 2), (301, 351, 3), (106, 351, 4),
    (223, 351, 5), (340, 1053, 1), (691, 1053, 2), (1042, 1053, 3), (3, 156, 1), (55, 468, 1),
    (211, 468, 2), (367, 468, 3), (107, 468, 4), (263, 468, 5), (419, 1404, 1), (887, 1404, 2),
    (1355, 1404, 3), (29, 260, 1), (81, 260, 2), (133, 260, 3), (185, 780, 1), (445, 780, 2),
    (705, 780, 3), (237, 780, 4), (497, 780, 5), (757, 2340, 1), (1537, 2340, 2), (2317, 2340, 3),
    (17, 104, 1), (43, 104, 2), (69, 312, 1), (173, 936, 1), (485, 936, 2), (797, 936, 3),
    (277, 936, 4), (589, 1872, 1), (1525, 1872, 2), (901, 1872, 3), (1837, 1872, 4), (95, 520, 1),
    (199, 520, 2), (303, 520, 3), (407, 520, 4), (511, 520, 5), (5, 208, 1), (31, 416, 1),
    (239, 416, 2), (57, 416, 3), (265, 416, 4), (83, 416, 5), (291, 2080, 1), (707, 2080, 2),
    (1123, 2080, 3), (1539, 4160, 1), (3619, 4160, 2), (1955, 4160, 3), (4035, 4160, 4), (109, 624, 1),
    (317, 624, 2), (525, 624, 3), (135, 832, 1), (343, 832, 2), (551, 832, 3), (759, 1664, 1),
    (1591, 1664, 2), (161, 1040, 1), (369, 1040, 2), (577, 1040, 3), (785, 1040, 4), (993, 3120, 1),
    (2033, 3120, 2), (3073, 3120, 3), (187, 1248, 1), (395, 1248, 2), (603, 1248, 3), (811, 2496, 1),
    (2059, 2496, 2), (1019, 2496, 3), (2267, 2496, 4), (1227, 3744, 1), (2475, 3744, 2), (3723, 3744, 3),
    (19, 78, 1), (45, 234, 1), (123, 702, 1), (357, 702, 2), (591, 2106, 1), (1293, 2106, 2),
    (1995, 2106, 3), (201, 1404, 1), (435, 1404, 2), (669, 1404, 3), (903, 1404, 4), (1137, 2808, 1),
    (2541, 2808, 2), (1371, 2808, 3), (2775, 2808, 4), (71, 858, 1), (149, 858, 2), (227, 1716, 1),
    (1085, 1716, 2), (305, 1716, 3), (1163, 1716, 4), (383, 1716, 5), (1241, 1716, 6), (461, 1716, 7),
    (1319, 1716, 8), (539, 2574, 1), (1397, 2574, 2), (2255, 2574, 3), (617, 2574, 4), (1475, 5148, 1),
    (4049, 5148, 2), (2333, 5148, 3), (4907, 10296, 1), (10055, 10296, 2), (695, 3432, 1), (1553, 3432, 2),
    (2411, 3432, 3), (3269, 3432, 4), (773, 4290, 1), (1631, 4290, 2), (2489, 4290, 3), (3347, 4290, 4),
    (4205, 8580, 1), (8495, 8580, 2), (851, 6006, 1), (1709, 6006, 2), (2567, 6006, 3), (3425, 6006, 4),
    (4283, 12012, 1), (10289, 12012, 2), (5141, 12012, 3), (11147, 12012, 4), (5999, 18018, 1), (12005, 18018, 2),
    (18011, 18018, 3), (7, 130, 1), (33, 130, 2), (59, 650, 1), (189, 650, 2), (319, 650, 3),
    (449, 650, 4), (579, 650, 5), (85, 1170, 1), (215, 1170, 2), (345, 1170, 3), (475, 1170, 4),
    (605, 1170, 5), (735, 3510, 1), (1905, 3510, 2), (3075, 3510, 3), (865, 3510, 4), (2035, 3510, 5),
    (3205, 3510, 6), (995, 3510, 7), (2165, 3510, 8), (3335, 3510, 9), (1125, 5850, 1), (2295, 5850, 2),
    (3465, 5850, 3), (4635, 5850, 4), (5805, 11700, 1), (11655, 11700, 2), (111, 1300, 1), (241, 1300, 2),
    (371, 1300, 3), (501, 1300, 4), (631, 1300, 5), (761, 1300, 6), (891, 1300, 7), (1021, 2600, 1),
    (2321, 2600, 2), (1151, 2600, 3), (2451, 2600, 4), (1281, 5200, 1), (3881, 5200, 2), (2581, 7800, 1),
    (5181, 7800, 2), (7781, 7800, 3), (8, 65, 1), (21, 195, 1), (86, 585, 1), (281, 585, 2),
    (476, 585, 3), (151, 585, 4), (346, 1755, 1), (931, 1755, 2), (1516, 1755, 3), (541, 1755, 4),
    (1126, 1755, 5), (1711, 1755, 6), (34, 325, 1), (99, 325, 2), (164, 975, 1), (489, 975, 2),
    (814, 975, 3), (229, 975, 4), (554, 2925, 1), (1529, 2925, 2), (2504, 2925, 3), (879, 2925, 4),
    (1854, 2925, 5), (2829, 8775, 1), (5754, 8775, 2), (8679, 8775, 3), (294, 1625, 1), (619, 1625, 2),
    (944, 1625, 3), (1269, 1625, 4), (1594, 1625, 5), (47, 390, 1), (177, 390, 2), (307, 1560, 1),
    (697, 1560, 2), (1087, 1560, 3), (1477, 6240, 1), (3037, 6240, 2), (4597, 6240, 3), (6157, 6240, 4),
    (60, 455, 1), (125, 455, 2), (190, 1365, 1), (645, 1365, 2), (1100, 1365, 3), (255, 1365, 4),
    (710, 4095, 1), (2075, 4095, 2), (3440, 4095, 3), (1165, 4095, 4), (6625, 8190, 1), (3895, 8190, 2),
    (320, 2275, 1), (775, 2275, 2), (1230, 2275, 3), (1685, 2275, 4), (2140, 6825, 1), (4415, 6825, 2),
    (6690, 6825, 3), (385, 3640, 1), (1295, 3640, 2), (2205, 3640, 3), (3115, 3640, 4), (905, 4550, 1),
    (1815, 4550, 2), (2725, 9100, 1), (7275, 9100, 2), (3635, 9100, 3), (8185, 9100, 4), (4545, 13650, 1),
    (9095, 13650, 2), (13645, 13650, 3), (9, 91, 1), (22, 91, 2), (35, 273, 1), (126, 273, 2),
    (217, 273, 3), (139, 364, 1), (321, 364, 2), (61, 1092, 1), (243, 1092, 2), (425, 1092, 3),
    (607, 1092, 4), (789, 1092, 5), (971, 3276, 1), (2063, 3276, 2), (3155, 3276, 3), (74, 637, 1),
    (165, 637, 2), (256, 637, 3), (347, 637, 4), (438, 637, 5), (529, 637, 6), (620, 637, 7),
    (87, 728, 1), (269, 728, 2), (451, 2184, 1), (1179, 2184, 2), (1907, 2184, 3), (633, 2184, 4),
    (1361, 2184, 5), (2089, 2184, 6), (23, 182, 1), (49, 182, 2), (75, 182, 3), (101, 546, 1),
    (283, 546, 2), (465, 1638, 1), (1011, 1638, 2), (1557, 1638, 3), (127, 910, 1), (309, 910, 2),
    (491, 910, 3), (673, 910, 4), (855, 2730, 1), (1765, 2730, 2), (2675, 2730, 3), (153, 1274, 1),
    (335, 1274, 2), (517, 1274, 3), (699, 2548, 1), (1973, 2548, 2), (881, 2548, 3), (2155, 2548, 4),
    (1063, 2548, 5), (2337, 5096, 1), (4885, 5096, 2), (1245, 3822, 1), (2519, 3822, 2), (3793, 3822, 3),
    (179, 1456, 1), (361, 1456, 2), (543, 1456, 3), (725, 1456, 4), (907, 2912, 1), (2363, 2912, 2),
    (1089, 2912, 3), (2545, 2912, 4), (1271, 4368, 1), (2727, 4368, 2), (4183, 4368, 3), (1453, 5824, 1),
    (2909, 5824, 2), (4365, 5824, 3), (5821, 5824, 4), (11, 143, 1), (24, 143, 2), (37, 143, 3),
    (193, 286, 1), (63, 286, 2), (219, 286, 3), (89, 429, 1), (232, 429, 2), (375, 429, 3),
    (245, 572, 1), (531, 572, 2), (115, 572, 3), (401, 572, 4), (271, 572, 5), (557, 572, 6),
    (141, 715, 1), (284, 715, 2), (427, 715, 3), (1285, 1430, 1), (713, 1430, 2), (12, 169, 1),
    (25, 169, 2), (38, 169, 3), (51, 338, 1), (233, 338, 2), (77, 507, 1), (753, 2028, 1),
    (1767, 2028, 2), (415, 2028, 3), (1429, 2028, 4), (259, 676, 1), (597, 676, 2), (103, 676, 3),
    (441, 676, 4), (285, 676, 5), (623, 2704, 1), (1299, 2704, 2), (1975, 2704, 3), (2651, 2704, 4),
    (129, 845, 1), (298, 845, 2), (467, 845, 3), (1481, 1690, 1), (805, 1690, 2), (311, 1014, 1),
    (649, 1014, 2), (987, 1014, 3), (155, 1183, 1), (324, 1183, 2), (493, 1183, 3), (1845, 2366, 1),
    (831, 2366, 2), (2183, 4732, 1), (4549, 4732, 2), (1169, 4732, 3), (3535, 4732, 4), (337, 1352, 1),
    (675, 1352, 2), (1013, 1352, 3), (1351, 1352, 4),
)

RIESEL = (
    (2, 4, 1), (4, 40, 1), (24, 80, 1), (64, 160, 1), (144, 160, 2), (8, 120, 1),
    (28, 240, 1), (148, 240, 2), (48, 360, 1), (168, 360, 2), (288, 1080, 1), (648, 1080, 2),
    (1008, 1080, 3), (68, 480, 1), (188, 480, 2), (308, 960, 1), (788, 960, 2), (428, 960, 3),
    (908, 960, 4), (88, 720, 1), (208, 720, 2), (328, 1440, 1), (1048, 1440, 2), (448, 1440, 3),
    (1168, 1440, 4), (568, 2160, 1), (1288, 2160, 2), (2008, 2160, 3), (688, 2160, 4), (1408, 2160, 5),
    (2128, 4320, 1), (4288, 4320, 2), (108, 840, 1), (228, 840, 2), (348, 840, 3), (468, 1680, 1),
    (1308, 1680, 2), (588, 1680, 3), (1428, 1680, 4), (708, 2520, 1), (1548, 2520, 2), (2388, 2520, 3),
    (828, 2520, 4), (1668, 5040, 1), (4188, 5040, 2), (2508, 5040, 3), (5028, 10080, 1), (10068, 10080, 2),
    (12, 100, 1), (32, 100, 2), (52, 200, 1), (152, 200, 2), (72, 200, 3), (172, 200, 4),
    (92, 300, 1), (192, 300, 2), (292, 300, 3), (16, 140, 1), (36, 140, 2), (56, 280, 1),
    (196, 1120, 1), (476, 1120, 2), (756, 1120, 3), (1036, 1120, 4), (76, 420, 1), (216, 420, 2),
    (356, 1260, 1), (776, 1260, 2), (1196, 1260, 3), (96, 560, 1), (236, 560, 2), (376, 560, 3),
    (516, 560, 4), (116, 700, 1), (256, 700, 2), (396, 700, 3), (536, 1400, 1), (1236, 1400, 2),
    (676, 2100, 1), (1376, 2100, 2), (2076, 2100, 3), (136, 980, 1), (276, 980, 2), (416, 980, 3),
    (556, 980, 4), (696, 980, 5), (836, 1960, 1), (1816, 1960, 2), (976, 1960, 3), (1956, 1960, 4),
    (0, 25, 1), (5, 25, 2), (10, 50, 1), (35, 150, 1), (85, 450, 1), (235, 450, 2),
    (385, 1350, 1), (835, 1350, 2), (1285, 1350, 3), (135, 750, 1), (285, 750, 2), (435, 750, 3),
    (585, 2250, 1), (1335, 2250, 2), (2085, 2250, 3), (735, 2250, 4), (1485, 2250, 5), (2235, 2250, 6),
    (15, 75, 1), (40, 75, 2), (65, 225, 1), (140, 225, 2), (215, 225, 3), (20, 125, 1),
    (45, 125, 2), (70, 250, 1), (195, 250, 2), (95, 375, 1), (220, 1125, 1), (595, 1125, 2),
    (970, 1125, 3), (345, 1875, 1), (720, 1875, 2), (1095, 1875, 3), (1470, 1875, 4), (1845, 1875, 5),
    (120, 625, 1), (245, 625, 2), (370, 625, 3), (495, 625, 4), (620, 1250, 1), (1245, 1250, 2),
    (7, 35, 1), (49, 70, 1), (21, 105, 1), (56, 105, 2), (91, 105, 3), (28, 175, 1),
    (63, 175, 2), (98, 175, 3), (133, 350, 1), (343, 350, 2), (0, 27, 1), (3, 81, 1),
    (30, 81, 2), (57, 81, 3), (33, 108, 1), (87, 756, 1), (195, 756, 2), (303, 2268, 1),
    (1059, 2268, 2), (1815, 2268, 3), (411, 2268, 4), (1167, 2268, 5), (1923, 2268, 6), (519, 2268, 7),
    (1275, 2268, 8), (2031, 2268, 9), (627, 1512, 1), (1383, 3024, 1), (2895, 3024, 2), (9, 135, 1),
    (36, 135, 2), (63, 540, 1), (333, 540, 2), (117, 540, 3), (387, 540, 4), (39, 162, 1),
    (93, 486, 1), (255, 486, 2), (417, 486, 3), (147, 810, 1), (309, 810, 2), (471, 810, 3),
    (633, 1620, 1), (1443, 1620, 2), (15, 216, 1), (69, 216, 2), (123, 648, 1), (339, 648, 2),
    (555, 648, 3), (177, 864, 1), (393, 864, 2), (609, 1728, 1), (1473, 1728, 2), (825, 1728, 3),
    (1689, 1728, 4), (99, 270, 1), (153, 270, 2), (207, 270, 3), (261, 810, 1), (531, 810, 2),
    (801, 810, 3), (21, 324, 1), (75, 324, 2), (129, 324, 3), (183, 324, 4), (237, 648, 1),
    (561, 648, 2), (291, 648, 3), (615, 648, 4), (51, 378, 1), (159, 378, 2), (213, 378, 3),
    (267, 378, 4), (321, 1134, 1), (699, 1134, 2), (1077, 1134, 3), (753, 1890, 1), (1131, 1890, 2),
    (1509, 1890, 3), (1887, 3780, 1), (3777, 3780, 2), (11, 33, 1), (22, 99, 1), (55, 99, 2),
    (88, 297, 1), (187, 297, 2), (583, 594, 1), (1, 55, 1), (67, 165, 1), (122, 495, 1),
    (287, 495, 2), (452, 1485, 1), (947, 1485, 2), (1442, 1485, 3), (23, 275, 1), (78, 275, 2),
    (133, 825, 1), (683, 825, 2), (188, 825, 3), (463, 825, 4), (243, 1375, 1), (518, 1375, 2),
    (793, 1375, 3), (2443, 2750, 1), (1343, 2750, 2), (89, 330, 1), (199, 330, 2), (13, 66, 1),
    (35, 264, 1), (101, 264, 2), (167, 792, 1), (431, 792, 2), (695, 1584, 1), (1487, 1584, 2),
    (233, 1320, 1), (497, 1320, 2), (761, 1320, 3), (1289, 1320, 4), (3, 77, 1), (25, 231, 1),
    (179, 693, 1), (410, 693, 2), (641, 693, 3), (113, 308, 1), (267, 308, 2), (47, 308, 3),
    (201, 1540, 1), (509, 1540, 2), (817, 1540, 3), (1433, 1540, 4), (58, 385, 1), (212, 385, 2),
    (289, 385, 3), (751, 1155, 1), (1136, 1155, 2), (223, 462, 1), (377, 1386, 1), (839, 2772, 1),
    (2225, 2772, 2), (1301, 2772, 3), (2687, 2772, 4), (15, 88, 1), (37, 440, 1), (213, 440, 2),
    (301, 440, 3), (389, 440, 4), (59, 528, 1), (235, 528, 2), (323, 2112, 1), (851, 2112, 2),
    (1379, 2112, 3), (1907, 2112, 4), (499, 2640, 1), (1027, 2640, 2), (2083, 5280, 1), (4723, 5280, 2),
    (2611, 5280, 3), (5251, 5280, 4), (81, 616, 1), (169, 616, 2), (257, 616, 3), (345, 1232, 1),
    (961, 1232, 2), (433, 2464, 1), (1049, 2464, 2), (1665, 2464, 3), (2281, 2464, 4), (521, 3080, 1),
    (1137, 3080, 2), (1753, 3080, 3), (2369, 6160, 1), (5449, 6160, 2), (27, 110, 1), (49, 110, 2),
    (71, 220, 1), (181, 220, 2), (93, 550, 1), (203, 1100, 1), (753, 1100, 2), (313, 1100, 3),
    (863, 1100, 4), (423, 1100, 5), (973, 1100, 6), (533, 1100, 7), (1083, 2200, 1), (2183, 2200, 2),
    (6, 121, 1), (17, 242, 1), (149, 242, 2), (160, 363, 1), (281, 363, 2), (50, 363, 3),
    (292, 363, 4), (61, 484, 1), (303, 484, 2), (193, 484, 3), (435, 484, 4), (83, 726, 1),
    (325, 726, 2), (215, 726, 3), (457, 1452, 1), (1183, 1452, 2), (105, 968, 1), (347, 968, 2),
    (589, 968, 3), (831, 968, 4), (116, 1089, 1), (358, 1089, 2), (479, 1089, 3), (721, 1089, 4),
    (1931, 2178, 1), (2173, 2178, 2), (7, 132, 1), (29, 132, 2), (73, 660, 1), (337, 660, 2),
    (469, 660, 3), (601, 660, 4), (227, 660, 5), (359, 1980, 1), (1019, 1980, 2), (1679, 1980, 3),
    (491, 1980, 4), (1151, 1980, 5), (1811, 3960, 1), (3791, 3960, 2), (623, 3300, 1), (1283, 3300, 2),
    (1943, 3300, 3), (2603, 6600, 1), (5903, 6600, 2), (3263, 6600, 3), (6563, 6600, 4), (19, 154, 1),
    (41, 154, 2), (239, 770, 1), (393, 770, 2), (547, 770, 3), (701, 2310, 1), (1471, 2310, 2),
    (107, 924, 1), (415, 924, 2), (569, 2772, 1), (1493, 2772, 2), (2417, 2772, 3), (877, 2772, 4),
    (1801, 5544, 1), (4573, 5544, 2), (2725, 8316, 1), (5497, 8316, 2), (8269, 8316, 3), (129, 1078, 1),
    (283, 1078, 2), (437, 1078, 3), (591, 2156, 1), (1669, 2156, 2), (745, 2156, 3), (1823, 2156, 4),
    (899, 2156, 5), (1977, 4312, 1), (4133, 4312, 2), (2131, 3234, 1), (3209, 3234, 2), (151, 1848, 1),
    (305, 1848, 2), (613, 1848, 3), (767, 1848, 4), (1075, 1848, 5), (1229, 3696, 1), (3077, 3696, 2),
    (1537, 3696, 3), (3385, 7392, 1), (7081, 7392, 2), (1691, 9240, 1), (3539, 9240, 2), (5387, 9240, 3),
    (9083, 9240, 4), (9, 176, 1), (31, 176, 2), (53, 176, 3), (75, 352, 1), (251, 352, 2),
    (97, 704, 1), (273, 704, 2), (449, 704, 3), (625, 704, 4), (119, 880, 1), (471, 880, 2),
    (647, 880, 3), (823, 880, 4), (317, 1056, 1), (493, 1056, 2), (845, 1056, 3), (1021, 1056, 4),
    (163, 1408, 1), (339, 1408, 2), (515, 1408, 3), (691, 2816, 1), (2099, 2816, 2), (867, 2816, 3),
    (2275, 2816, 4), (1043, 4224, 1), (3859, 4224, 2), (1219, 5632, 1), (2627, 5632, 2), (4035, 5632, 3),
    (5443, 11264, 1), (11075, 11264, 2), (2803, 7040, 1), (4211, 7040, 2), (5619, 7040, 3), (7027, 7040, 4),
    (43, 198, 1), (65, 198, 2), (109, 396, 1), (307, 396, 2), (131, 396, 3), (329, 396, 4),
    (175, 594, 1), (373, 594, 2), (571, 594, 3), (197, 1188, 1), (395, 1188, 2), (593, 1188, 3),
    (791, 1188, 4), (989, 1188, 5), (1187, 1188, 6),
)

# (modulus, prime count, starred) -- starred marks the footnote row (b = 4,
# where the single prime 5 is shared once by each covering).
TABLE_L = (
    (4, 1, True), (13, 1, False), (16, 1, False), (25, 2, False), (26, 1, False), (27, 1, False),
    (32, 1, False), (33, 1, False), (35, 1, False), (39, 1, False), (40, 1, False), (48, 1, False),
    (50, 1, False), (55, 1, False), (64, 2, False), (65, 1, False), (66, 1, False), (70, 1, False),
    (75, 2, False), (77, 1, False), (78, 1, False), (80, 1, False), (81, 3, False), (88, 1, False),
    (91, 2, False), (96, 1, False), (99, 2, False), (100, 2, False), (104, 2, False), (105, 3, False),
    (108, 1, False), (110, 2, False), (112, 2, False), (117, 4, False), (120, 1, False), (121, 1, False),
    (125, 2, False), (130, 2, False), (132, 2, False), (135, 2, False), (140, 2, False), (143, 3, False),
    (144, 2, False), (150, 1, False), (154, 2, False), (156, 1, False), (160, 2, False), (162, 1, False),
    (165, 1, False), (169, 3, False), (175, 3, False), (176, 3, False), (182, 3, False), (195, 1, False),
    (198, 2, False), (200, 4, False), (208, 1, False), (216, 2, False), (220, 2, False), (224, 2, False),
    (225, 3, False), (231, 1, False), (234, 1, False), (240, 2, False), (242, 2, False), (250, 2, False),
    (260, 3, False), (264, 2, False), (270, 3, False), (273, 3, False), (275, 2, False), (280, 1, False),
    (286, 3, False), (288, 3, False), (297, 2, False), (300, 3, False), (308, 3, False), (312, 1, False),
    (324, 4, False), (325, 2, False), (330, 2, False), (336, 3, False), (338, 2, False), (350, 2, False),
    (351, 5, False), (352, 2, False), (360, 2, False), (363, 4, False), (364, 2, False), (375, 1, False),
    (378, 4, False), (385, 3, False), (390, 2, False), (396, 4, False), (416, 5, False), (420, 2, False),
    (429, 3, False), (432, 3, False), (440, 4, False), (448, 2, False), (450, 2, False), (455, 2, False),
    (462, 1, False), (468, 5, False), (480, 2, False), (484, 4, False), (486, 3, False), (495, 2, False),
    (507, 1, False), (520, 5, False), (528, 2, False), (540, 4, False), (546, 2, False), (550, 1, False),
    (560, 4, False), (572, 6, False), (585, 4, False), (594, 4, False), (616, 3, False), (624, 3, False),
    (625, 4, False), (637, 7, False), (648, 7, False), (650, 5, False), (660, 5, False), (672, 2, False),
    (676, 5, False), (693, 3, False), (700, 3, False), (702, 2, False), (704, 4, False), (715, 3, False),
    (720, 2, False), (726, 3, False), (728, 2, False), (750, 3, False), (756, 2, False), (770, 3, False),
    (780, 5, False), (784, 5, False), (792, 2, False), (810, 6, False), (825, 4, False), (832, 3, False),
    (840, 3, False), (845, 3, False), (858, 2, False), (864, 2, False), (880, 4, False), (896, 2, False),
    (910, 4, False), (924, 2, False), (936, 4, False), (960, 4, False), (968, 4, False), (975, 4, False),
    (980, 5, False), (1014, 3, False), (1040, 4, False), (1053, 3, False), (1056, 4, False), (1078, 3, False),
    (1080, 3, False), (1089, 4, False), (1092, 5, False), (1100, 7, False), (1120, 4, False), (1125, 3, False),
    (1134, 3, False), (1155, 2, False), (1170, 5, False), (1183, 3, False), (1188, 6, False), (1232, 2, False),
    (1248, 3, False), (1250, 2, False), (1260, 3, False), (1274, 3, False), (1300, 7, False), (1320, 4, False),
    (1344, 4, False), (1350, 3, False), (1352, 4, False), (1365, 4, False), (1375, 3, False), (1386, 1, False),
    (1400, 2, False), (1404, 7, False), (1408, 3, False), (1430, 2, False), (1440, 4, False), (1452, 2, False),
    (1456, 4, False), (1485, 3, False), (1512, 1, False), (1540, 4, False), (1560, 3, False), (1568, 2, False),
    (1584, 2, False), (1620, 2, False), (1625, 5, False), (1638, 3, False), (1664, 2, False), (1680, 4, False),
    (1690, 2, False), (1716, 8, False), (1728, 4, False), (1755, 6, False), (1792, 4, False), (1848, 5, False),
    (1872, 4, False), (1875, 5, False), (1890, 3, False), (1960, 4, False), (1980, 5, False), (2016, 3, False),
    (2028, 4, False), (2080, 3, False), (2100, 3, False), (2106, 3, False), (2112, 4, False), (2156, 5, False),
    (2160, 5, False), (2178, 2, False), (2184, 6, False), (2200, 2, False), (2250, 6, False), (2268, 9, False),
    (2275, 4, False), (2310, 2, False), (2340, 3, False), (2366, 2, False), (2464, 4, False), (2496, 4, False),
    (2520, 4, False), (2548, 5, False), (2574, 4, False), (2600, 4, False), (2640, 2, False), (2704, 4, False),
    (2730, 3, False), (2750, 2, False), (2772, 8, False), (2808, 4, False), (2816, 4, False), (2912, 4, False),
    (2925, 5, False), (3024, 2, False), (3080, 3, False), (3120, 3, False), (3136, 4, False), (3234, 2, False),
    (3276, 3, False), (3300, 3, False), (3360, 5, False), (3432, 4, False), (3510, 9, False), (3640, 4, False),
    (3696, 3, False), (3744, 3, False), (3780, 2, False), (3822, 3, False), (3960, 2, False), (4095, 4, False),
    (4160, 4, False), (4224, 2, False), (4290, 4, False), (4312, 2, False), (4320, 2, False), (4368, 3, False),
    (4550, 2, False), (4732, 4, False), (5040, 3, False), (5096, 2, False), (5148, 3, False), (5200, 2, False),
    (5280, 4, False), (5544, 2, False), (5632, 3, False), (5824, 4, False), (5850, 4, False), (6006, 4, False),
    (6160, 2, False), (6240, 4, False), (6600, 4, False), (6825, 3, False), (7040, 4, False), (7392, 2, False),
    (7800, 3, False), (8190, 2, False), (8316, 3, False), (8580, 2, False), (8775, 3, False), (9100, 4, False),
    (9240, 4, False), (10080, 2, False), (10296, 2, False), (11264, 2, False), (11700, 2, False), (12012, 4, False),
    (13650, 3, False), (18018, 3, False),
)

# (modulus, lower bound on unused primes, starred) -- starred means the
# underlying cyclotomic value was not completely factored, so the count is
# only a lower bound.
TABLE_M = (
    (225, 1, False), (288, 1, False), (300, 1, False), (350, 2, False), (637, 1, False), (960, 1, False),
    (968, 1, True), (1080, 1, False), (1120, 1, False), (1125, 1, True), (1155, 1, False), (1232, 1, False),
    (1250, 2, False), (1260, 1, False), (1350, 2, True), (1352, 1, False), (1430, 3, True), (1452, 3, True),
    (1485, 1, True), (1568, 1, False), (1584, 2, False), (1620, 6, False), (1625, 2, True), (1664, 1, True),
    (1690, 2, True), (1792, 1, True), (1875, 1, True), (1960, 3, True), (2016, 1, True), (2028, 2, True),
    (2112, 1, True), (2200, 3, True), (2310, 2, True), (2340, 4, True), (2704, 1, True), (2730, 1, True),
    (2750, 4, True), (3024, 1, True), (3120, 1, True), (3136, 1, True), (3234, 1, True), (3276, 1, True),
    (3744, 1, True), (3780, 2, True), (3960, 2, True), (4312, 1, False), (4320, 4, True), (4368, 1, True),
    (4732, 2, True), (5096, 1, True), (5200, 3, True), (6240, 2, True), (6825, 1, True), (7392, 2, True),
    (7800, 3, True), (8316, 1, True), (8580, 3, True), (10296, 1, True), (11264, 1, True), (11700, 4, True),
    (12012, 1, True),
)

# (residue, modulus, prime): classes covering n ≡ 2 (mod 8), each prime of
# order equal to its modulus base 2.
TABLE1 = (
    (2, 16, 257),
    (10, 48, 673),
    (26, 96, 22253377),
    (74, 288, 1153),
    (170, 288, 6337),
    (266, 288, 38941695937),
    (42, 144, 577),
    (90, 144, 487824887233),
    (138, 432, 4261383649),
    (282, 432, 209924353),
    (426, 432, 24929060818265360451708193),
)

# the five-class warm-up covering and its per-integer verification rows
C0 = ((0, 3), (1, 3), (2, 9), (5, 9), (8, 9))

TABLE2 = (
    (0, 0, 3), (1, 1, 3), (2, 2, 9), (3, 0, 3), (4, 1, 3),
    (5, 5, 9), (6, 0, 3), (7, 1, 3), (8, 8, 9),
)
