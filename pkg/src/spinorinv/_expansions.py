"""Explicit monomial expansions of selected invariants and qubit tangle polynomials.

Generated data tables; do not edit by hand.
"""

APPENDIX = \
{'H_a': ((2,
          ((-1, '0111', '1000'),
           (1, '0110', '1001'),
           (-1, '0113', '1002'),
           (1, '0112', '1003'),
           (1, '0101', '1010'),
           (-1, '0100', '1011'),
           (1, '0103', '1012'),
           (-1, '0102', '1013'),
           (-1, '0131', '1020'),
           (1, '0130', '1021'),
           (-1, '0133', '1022'),
           (1, '0132', '1023'),
           (1, '0121', '1030'),
           (-1, '0120', '1031'),
           (1, '0123', '1032'),
           (-1, '0122', '1033'),
           (1, '0011', '1100'),
           (-1, '0010', '1101'),
           (1, '0013', '1102'),
           (-1, '0012', '1103'),
           (-1, '0001', '1110'),
           (1, '0000', '1111'),
           (-1, '0003', '1112'),
           (1, '0002', '1113'),
           (1, '0031', '1120'),
           (-1, '0030', '1121'),
           (1, '0033', '1122'),
           (-1, '0032', '1123'),
           (-1, '0021', '1130'),
           (1, '0020', '1131'),
           (-1, '0023', '1132'),
           (1, '0022', '1133'),
           (-1, '0311', '1200'),
           (1, '0310', '1201'),
           (-1, '0313', '1202'),
           (1, '0312', '1203'),
           (1, '0301', '1210'),
           (-1, '0300', '1211'),
           (1, '0303', '1212'),
           (-1, '0302', '1213'),
           (-1, '0331', '1220'),
           (1, '0330', '1221'),
           (-1, '0333', '1222'),
           (1, '0332', '1223'),
           (1, '0321', '1230'),
           (-1, '0320', '1231'),
           (1, '0323', '1232'),
           (-1, '0322', '1233'),
           (1, '0211', '1300'),
           (-1, '0210', '1301'),
           (1, '0213', '1302'),
           (-1, '0212', '1303'),
           (-1, '0201', '1310'),
           (1, '0200', '1311'),
           (-1, '0203', '1312'),
           (1, '0202', '1313'),
           (1, '0231', '1320'),
           (-1, '0230', '1321'),
           (1, '0233', '1322'),
           (-1, '0232', '1323'),
           (-1, '0221', '1330'),
           (1, '0220', '1331'),
           (-1, '0223', '1332'),
           (1, '0222', '1333'),
           (-1, '2111', '3000'),
           (1, '2110', '3001'),
           (-1, '2113', '3002'),
           (1, '2112', '3003'),
           (1, '2101', '3010'),
           (-1, '2100', '3011'),
           (1, '2103', '3012'),
           (-1, '2102', '3013'),
           (-1, '2131', '3020'),
           (1, '2130', '3021'),
           (-1, '2133', '3022'),
           (1, '2132', '3023'),
           (1, '2121', '3030'),
           (-1, '2120', '3031'),
           (1, '2123', '3032'),
           (-1, '2122', '3033'),
           (1, '2011', '3100'),
           (-1, '2010', '3101'),
           (1, '2013', '3102'),
           (-1, '2012', '3103'),
           (-1, '2001', '3110'),
           (1, '2000', '3111'),
           (-1, '2003', '3112'),
           (1, '2002', '3113'),
           (1, '2031', '3120'),
           (-1, '2030', '3121'),
           (1, '2033', '3122'),
           (-1, '2032', '3123'),
           (-1, '2021', '3130'),
           (1, '2020', '3131'),
           (-1, '2023', '3132'),
           (1, '2022', '3133'),
           (-1, '2311', '3200'),
           (1, '2310', '3201'),
           (-1, '2313', '3202'),
           (1, '2312', '3203'),
           (1, '2301', '3210'),
           (-1, '2300', '3211'),
           (1, '2303', '3212'),
           (-1, '2302', '3213'),
           (-1, '2331', '3220'),
           (1, '2330', '3221'),
           (-1, '2333', '3222'),
           (1, '2332', '3223'),
           (1, '2321', '3230'),
           (-1, '2320', '3231'),
           (1, '2323', '3232'),
           (-1, '2322', '3233'),
           (1, '2211', '3300'),
           (-1, '2210', '3301'),
           (1, '2213', '3302'),
           (-1, '2212', '3303'),
           (-1, '2201', '3310'),
           (1, '2200', '3311'),
           (-1, '2203', '3312'),
           (1, '2202', '3313'),
           (1, '2231', '3320'),
           (-1, '2230', '3321'),
           (1, '2233', '3322'),
           (-1, '2232', '3323'),
           (-1, '2221', '3330'),
           (1, '2220', '3331'),
           (-1, '2223', '3332'),
           (1, '2222', '3333')),
          ()),),
 'H_b': ((2,
          ((1, '1333', '2000'),
           (-1, '1332', '2001'),
           (1, '1331', '2002'),
           (-1, '1330', '2003'),
           (-1, '1323', '2010'),
           (1, '1322', '2011'),
           (-1, '1321', '2012'),
           (1, '1320', '2013'),
           (1, '1313', '2020'),
           (-1, '1312', '2021'),
           (1, '1311', '2022'),
           (-1, '1310', '2023'),
           (-1, '1303', '2030'),
           (1, '1302', '2031'),
           (-1, '1301', '2032'),
           (1, '1300', '2033'),
           (-1, '1233', '2100'),
           (1, '1232', '2101'),
           (-1, '1231', '2102'),
           (1, '1230', '2103'),
           (1, '1223', '2110'),
           (-1, '1222', '2111'),
           (1, '1221', '2112'),
           (-1, '1220', '2113'),
           (-1, '1213', '2120'),
           (1, '1212', '2121'),
           (-1, '1211', '2122'),
           (1, '1210', '2123'),
           (1, '1203', '2130'),
           (-1, '1202', '2131'),
           (1, '1201', '2132'),
           (-1, '1200', '2133'),
           (1, '1133', '2200'),
           (-1, '1132', '2201'),
           (1, '1131', '2202'),
           (-1, '1130', '2203'),
           (-1, '1123', '2210'),
           (1, '1122', '2211'),
           (-1, '1121', '2212'),
           (1, '1120', '2213'),
           (1, '1113', '2220'),
           (-1, '1112', '2221'),
           (1, '1111', '2222'),
           (-1, '1110', '2223'),
           (-1, '1103', '2230'),
           (1, '1102', '2231'),
           (-1, '1101', '2232'),
           (1, '1100', '2233'),
           (-1, '1033', '2300'),
           (1, '1032', '2301'),
           (-1, '1031', '2302'),
           (1, '1030', '2303'),
           (1, '1023', '2310'),
           (-1, '1022', '2311'),
           (1, '1021', '2312'),
           (-1, '1020', '2313'),
           (-1, '1013', '2320'),
           (1, '1012', '2321'),
           (-1, '1011', '2322'),
           (1, '1010', '2323'),
           (1, '1003', '2330'),
           (-1, '1002', '2331'),
           (1, '1001', '2332'),
           (-1, '1000', '2333'),
           (-1, '0333', '3000'),
           (1, '0332', '3001'),
           (-1, '0331', '3002'),
           (1, '0330', '3003'),
           (1, '0323', '3010'),
           (-1, '0322', '3011'),
           (1, '0321', '3012'),
           (-1, '0320', '3013'),
           (-1, '0313', '3020'),
           (1, '0312', '3021'),
           (-1, '0311', '3022'),
           (1, '0310', '3023'),
           (1, '0303', '3030'),
           (-1, '0302', '3031'),
           (1, '0301', '3032'),
           (-1, '0300', '3033'),
           (1, '0233', '3100'),
           (-1, '0232', '3101'),
           (1, '0231', '3102'),
           (-1, '0230', '3103'),
           (-1, '0223', '3110'),
           (1, '0222', '3111'),
           (-1, '0221', '3112'),
           (1, '0220', '3113'),
           (1, '0213', '3120'),
           (-1, '0212', '3121'),
           (1, '0211', '3122'),
           (-1, '0210', '3123'),
           (-1, '0203', '3130'),
           (1, '0202', '3131'),
           (-1, '0201', '3132'),
           (1, '0200', '3133'),
           (-1, '0133', '3200'),
           (1, '0132', '3201'),
           (-1, '0131', '3202'),
           (1, '0130', '3203'),
           (1, '0123', '3210'),
           (-1, '0122', '3211'),
           (1, '0121', '3212'),
           (-1, '0120', '3213'),
           (-1, '0113', '3220'),
           (1, '0112', '3221'),
           (-1, '0111', '3222'),
           (1, '0110', '3223'),
           (1, '0103', '3230'),
           (-1, '0102', '3231'),
           (1, '0101', '3232'),
           (-1, '0100', '3233'),
           (1, '0033', '3300'),
           (-1, '0032', '3301'),
           (1, '0031', '3302'),
           (-1, '0030', '3303'),
           (-1, '0023', '3310'),
           (1, '0022', '3311'),
           (-1, '0021', '3312'),
           (1, '0020', '3313'),
           (1, '0013', '3320'),
           (-1, '0012', '3321'),
           (1, '0011', '3322'),
           (-1, '0010', '3323'),
           (-1, '0003', '3330'),
           (1, '0002', '3331'),
           (-1, '0001', '3332'),
           (1, '0000', '3333')),
          ()),),
 'H_c': ((2,
          ((-1, '0113', '1000'),
           (1, '0112', '1001'),
           (-1, '0111', '1002'),
           (1, '0110', '1003'),
           (1, '0103', '1010'),
           (-1, '0102', '1011'),
           (1, '0101', '1012'),
           (-1, '0100', '1013'),
           (-1, '0133', '1020'),
           (1, '0132', '1021'),
           (-1, '0131', '1022'),
           (1, '0130', '1023'),
           (1, '0123', '1030'),
           (-1, '0122', '1031'),
           (1, '0121', '1032'),
           (-1, '0120', '1033'),
           (1, '0013', '1100'),
           (-1, '0012', '1101'),
           (1, '0011', '1102'),
           (-1, '0010', '1103'),
           (-1, '0003', '1110'),
           (1, '0002', '1111'),
           (-1, '0001', '1112'),
           (1, '0000', '1113'),
           (1, '0033', '1120'),
           (-1, '0032', '1121'),
           (1, '0031', '1122'),
           (-1, '0030', '1123'),
           (-1, '0023', '1130'),
           (1, '0022', '1131'),
           (-1, '0021', '1132'),
           (1, '0020', '1133'),
           (-1, '0313', '1200'),
           (1, '0312', '1201'),
           (-1, '0311', '1202'),
           (1, '0310', '1203'),
           (1, '0303', '1210'),
           (-1, '0302', '1211'),
           (1, '0301', '1212'),
           (-1, '0300', '1213'),
           (-1, '0333', '1220'),
           (1, '0332', '1221'),
           (-1, '0331', '1222'),
           (1, '0330', '1223'),
           (1, '0323', '1230'),
           (-1, '0322', '1231'),
           (1, '0321', '1232'),
           (-1, '0320', '1233'),
           (1, '0213', '1300'),
           (-1, '0212', '1301'),
           (1, '0211', '1302'),
           (-1, '0210', '1303'),
           (-1, '0203', '1310'),
           (1, '0202', '1311'),
           (-1, '0201', '1312'),
           (1, '0200', '1313'),
           (1, '0233', '1320'),
           (-1, '0232', '1321'),
           (1, '0231', '1322'),
           (-1, '0230', '1323'),
           (-1, '0223', '1330'),
           (1, '0222', '1331'),
           (-1, '0221', '1332'),
           (1, '0220', '1333'),
           (-1, '2113', '3000'),
           (1, '2112', '3001'),
           (-1, '2111', '3002'),
           (1, '2110', '3003'),
           (1, '2103', '3010'),
           (-1, '2102', '3011'),
           (1, '2101', '3012'),
           (-1, '2100', '3013'),
           (-1, '2133', '3020'),
           (1, '2132', '3021'),
           (-1, '2131', '3022'),
           (1, '2130', '3023'),
           (1, '2123', '3030'),
           (-1, '2122', '3031'),
           (1, '2121', '3032'),
           (-1, '2120', '3033'),
           (1, '2013', '3100'),
           (-1, '2012', '3101'),
           (1, '2011', '3102'),
           (-1, '2010', '3103'),
           (-1, '2003', '3110'),
           (1, '2002', '3111'),
           (-1, '2001', '3112'),
           (1, '2000', '3113'),
           (1, '2033', '3120'),
           (-1, '2032', '3121'),
           (1, '2031', '3122'),
           (-1, '2030', '3123'),
           (-1, '2023', '3130'),
           (1, '2022', '3131'),
           (-1, '2021', '3132'),
           (1, '2020', '3133'),
           (-1, '2313', '3200'),
           (1, '2312', '3201'),
           (-1, '2311', '3202'),
           (1, '2310', '3203'),
           (1, '2303', '3210'),
           (-1, '2302', '3211'),
           (1, '2301', '3212'),
           (-1, '2300', '3213'),
           (-1, '2333', '3220'),
           (1, '2332', '3221'),
           (-1, '2331', '3222'),
           (1, '2330', '3223'),
           (1, '2323', '3230'),
           (-1, '2322', '3231'),
           (1, '2321', '3232'),
           (-1, '2320', '3233'),
           (1, '2213', '3300'),
           (-1, '2212', '3301'),
           (1, '2211', '3302'),
           (-1, '2210', '3303'),
           (-1, '2203', '3310'),
           (1, '2202', '3311'),
           (-1, '2201', '3312'),
           (1, '2200', '3313'),
           (1, '2233', '3320'),
           (-1, '2232', '3321'),
           (1, '2231', '3322'),
           (-1, '2230', '3323'),
           (-1, '2223', '3330'),
           (1, '2222', '3331'),
           (-1, '2221', '3332'),
           (1, '2220', '3333')),
          ()),),
 'H_d': ((2,
          ((-1, '0131', '1000'),
           (1, '0130', '1001'),
           (-1, '0133', '1002'),
           (1, '0132', '1003'),
           (1, '0121', '1010'),
           (-1, '0120', '1011'),
           (1, '0123', '1012'),
           (-1, '0122', '1013'),
           (-1, '0111', '1020'),
           (1, '0110', '1021'),
           (-1, '0113', '1022'),
           (1, '0112', '1023'),
           (1, '0101', '1030'),
           (-1, '0100', '1031'),
           (1, '0103', '1032'),
           (-1, '0102', '1033'),
           (1, '0031', '1100'),
           (-1, '0030', '1101'),
           (1, '0033', '1102'),
           (-1, '0032', '1103'),
           (-1, '0021', '1110'),
           (1, '0020', '1111'),
           (-1, '0023', '1112'),
           (1, '0022', '1113'),
           (1, '0011', '1120'),
           (-1, '0010', '1121'),
           (1, '0013', '1122'),
           (-1, '0012', '1123'),
           (-1, '0001', '1130'),
           (1, '0000', '1131'),
           (-1, '0003', '1132'),
           (1, '0002', '1133'),
           (-1, '0331', '1200'),
           (1, '0330', '1201'),
           (-1, '0333', '1202'),
           (1, '0332', '1203'),
           (1, '0321', '1210'),
           (-1, '0320', '1211'),
           (1, '0323', '1212'),
           (-1, '0322', '1213'),
           (-1, '0311', '1220'),
           (1, '0310', '1221'),
           (-1, '0313', '1222'),
           (1, '0312', '1223'),
           (1, '0301', '1230'),
           (-1, '0300', '1231'),
           (1, '0303', '1232'),
           (-1, '0302', '1233'),
           (1, '0231', '1300'),
           (-1, '0230', '1301'),
           (1, '0233', '1302'),
           (-1, '0232', '1303'),
           (-1, '0221', '1310'),
           (1, '0220', '1311'),
           (-1, '0223', '1312'),
           (1, '0222', '1313'),
           (1, '0211', '1320'),
           (-1, '0210', '1321'),
           (1, '0213', '1322'),
           (-1, '0212', '1323'),
           (-1, '0201', '1330'),
           (1, '0200', '1331'),
           (-1, '0203', '1332'),
           (1, '0202', '1333'),
           (-1, '2131', '3000'),
           (1, '2130', '3001'),
           (-1, '2133', '3002'),
           (1, '2132', '3003'),
           (1, '2121', '3010'),
           (-1, '2120', '3011'),
           (1, '2123', '3012'),
           (-1, '2122', '3013'),
           (-1, '2111', '3020'),
           (1, '2110', '3021'),
           (-1, '2113', '3022'),
           (1, '2112', '3023'),
           (1, '2101', '3030'),
           (-1, '2100', '3031'),
           (1, '2103', '3032'),
           (-1, '2102', '3033'),
           (1, '2031', '3100'),
           (-1, '2030', '3101'),
           (1, '2033', '3102'),
           (-1, '2032', '3103'),
           (-1, '2021', '3110'),
           (1, '2020', '3111'),
           (-1, '2023', '3112'),
           (1, '2022', '3113'),
           (1, '2011', '3120'),
           (-1, '2010', '3121'),
           (1, '2013', '3122'),
           (-1, '2012', '3123'),
           (-1, '2001', '3130'),
           (1, '2000', '3131'),
           (-1, '2003', '3132'),
           (1, '2002', '3133'),
           (-1, '2331', '3200'),
           (1, '2330', '3201'),
           (-1, '2333', '3202'),
           (1, '2332', '3203'),
           (1, '2321', '3210'),
           (-1, '2320', '3211'),
           (1, '2323', '3212'),
           (-1, '2322', '3213'),
           (-1, '2311', '3220'),
           (1, '2310', '3221'),
           (-1, '2313', '3222'),
           (1, '2312', '3223'),
           (1, '2301', '3230'),
           (-1, '2300', '3231'),
           (1, '2303', '3232'),
           (-1, '2302', '3233'),
           (1, '2231', '3300'),
           (-1, '2230', '3301'),
           (1, '2233', '3302'),
           (-1, '2232', '3303'),
           (-1, '2221', '3310'),
           (1, '2220', '3311'),
           (-1, '2223', '3312'),
           (1, '2222', '3313'),
           (1, '2211', '3320'),
           (-1, '2210', '3321'),
           (1, '2213', '3322'),
           (-1, '2212', '3323'),
           (-1, '2201', '3330'),
           (1, '2200', '3331'),
           (-1, '2203', '3332'),
           (1, '2202', '3333')),
          ()),),
 'I_11a': ((-2,
            ((1, '101', '110'),
             (-1, '100', '111'),
             (1, '103', '112'),
             (-1, '102', '113'),
             (1, '121', '130'),
             (-1, '120', '131'),
             (1, '123', '132'),
             (-1, '122', '133'),
             (1, '301', '310'),
             (-1, '300', '311'),
             (1, '303', '312'),
             (-1, '302', '313'),
             (1, '321', '330'),
             (-1, '320', '331'),
             (1, '323', '332'),
             (-1, '322', '333')),
            ((1, '033', '200'),
             (-1, '032', '201'),
             (1, '031', '202'),
             (-1, '030', '203'),
             (-1, '023', '210'),
             (1, '022', '211'),
             (-1, '021', '212'),
             (1, '020', '213'),
             (1, '013', '220'),
             (-1, '012', '221'),
             (1, '011', '222'),
             (-1, '010', '223'),
             (-1, '003', '230'),
             (1, '002', '231'),
             (-1, '001', '232'),
             (1, '000', '233'))),
           (2,
            ((1, '113', '120'),
             (-1, '112', '121'),
             (1, '111', '122'),
             (-1, '110', '123'),
             (-1, '103', '130'),
             (1, '102', '131'),
             (-1, '101', '132'),
             (1, '100', '133'),
             (1, '313', '320'),
             (-1, '312', '321'),
             (1, '311', '322'),
             (-1, '310', '323'),
             (-1, '303', '330'),
             (1, '302', '331'),
             (-1, '301', '332'),
             (1, '300', '333')),
            ((1, '011', '200'),
             (-1, '010', '201'),
             (1, '013', '202'),
             (-1, '012', '203'),
             (-1, '001', '210'),
             (1, '000', '211'),
             (-1, '003', '212'),
             (1, '002', '213'),
             (1, '031', '220'),
             (-1, '030', '221'),
             (1, '033', '222'),
             (-1, '032', '223'),
             (-1, '021', '230'),
             (1, '020', '231'),
             (-1, '023', '232'),
             (1, '022', '233'))),
           (-2,
            ((1, '001', '010'),
             (-1, '000', '011'),
             (1, '003', '012'),
             (-1, '002', '013'),
             (1, '021', '030'),
             (-1, '020', '031'),
             (1, '023', '032'),
             (-1, '022', '033'),
             (1, '201', '210'),
             (-1, '200', '211'),
             (1, '203', '212'),
             (-1, '202', '213'),
             (1, '221', '230'),
             (-1, '220', '231'),
             (1, '223', '232'),
             (-1, '222', '233')),
            ((1, '133', '300'),
             (-1, '132', '301'),
             (1, '131', '302'),
             (-1, '130', '303'),
             (-1, '123', '310'),
             (1, '122', '311'),
             (-1, '121', '312'),
             (1, '120', '313'),
             (1, '113', '320'),
             (-1, '112', '321'),
             (1, '111', '322'),
             (-1, '110', '323'),
             (-1, '103', '330'),
             (1, '102', '331'),
             (-1, '101', '332'),
             (1, '100', '333'))),
           (2,
            ((1, '013', '020'),
             (-1, '012', '021'),
             (1, '011', '022'),
             (-1, '010', '023'),
             (-1, '003', '030'),
             (1, '002', '031'),
             (-1, '001', '032'),
             (1, '000', '033'),
             (1, '213', '220'),
             (-1, '212', '221'),
             (1, '211', '222'),
             (-1, '210', '223'),
             (-1, '203', '230'),
             (1, '202', '231'),
             (-1, '201', '232'),
             (1, '200', '233')),
            ((1, '111', '300'),
             (-1, '110', '301'),
             (1, '113', '302'),
             (-1, '112', '303'),
             (-1, '101', '310'),
             (1, '100', '311'),
             (-1, '103', '312'),
             (1, '102', '313'),
             (1, '131', '320'),
             (-1, '130', '321'),
             (1, '133', '322'),
             (-1, '132', '323'),
             (-1, '121', '330'),
             (1, '120', '331'),
             (-1, '123', '332'),
             (1, '122', '333'))),
           (-1,
            ((1, '011', '100'),
             (-1, '010', '101'),
             (1, '013', '102'),
             (-1, '012', '103'),
             (-1, '001', '110'),
             (1, '000', '111'),
             (-1, '003', '112'),
             (1, '002', '113'),
             (1, '031', '120'),
             (-1, '030', '121'),
             (1, '033', '122'),
             (-1, '032', '123'),
             (-1, '021', '130'),
             (1, '020', '131'),
             (-1, '023', '132'),
             (1, '022', '133'),
             (1, '211', '300'),
             (-1, '210', '301'),
             (1, '213', '302'),
             (-1, '212', '303'),
             (-1, '201', '310'),
             (1, '200', '311'),
             (-1, '203', '312'),
             (1, '202', '313'),
             (1, '231', '320'),
             (-1, '230', '321'),
             (1, '233', '322'),
             (-1, '232', '323'),
             (-1, '221', '330'),
             (1, '220', '331'),
             (-1, '223', '332'),
             (1, '222', '333')),
            ((1, '133', '200'),
             (-1, '132', '201'),
             (1, '131', '202'),
             (-1, '130', '203'),
             (-1, '123', '210'),
             (1, '122', '211'),
             (-1, '121', '212'),
             (1, '120', '213'),
             (1, '113', '220'),
             (-1, '112', '221'),
             (1, '111', '222'),
             (-1, '110', '223'),
             (-1, '103', '230'),
             (1, '102', '231'),
             (-1, '101', '232'),
             (1, '100', '233'),
             (1, '033', '300'),
             (-1, '032', '301'),
             (1, '031', '302'),
             (-1, '030', '303'),
             (-1, '023', '310'),
             (1, '022', '311'),
             (-1, '021', '312'),
             (1, '020', '313'),
             (1, '013', '320'),
             (-1, '012', '321'),
             (1, '011', '322'),
             (-1, '010', '323'),
             (-1, '003', '330'),
             (1, '002', '331'),
             (-1, '001', '332'),
             (1, '000', '333'))),
           (-1,
            ((1, '033', '100'),
             (-1, '032', '101'),
             (1, '031', '102'),
             (-1, '030', '103'),
             (-1, '023', '110'),
             (1, '022', '111'),
             (-1, '021', '112'),
             (1, '020', '113'),
             (1, '013', '120'),
             (-1, '012', '121'),
             (1, '011', '122'),
             (-1, '010', '123'),
             (-1, '003', '130'),
             (1, '002', '131'),
             (-1, '001', '132'),
             (1, '000', '133'),
             (1, '233', '300'),
             (-1, '232', '301'),
             (1, '231', '302'),
             (-1, '230', '303'),
             (-1, '223', '310'),
             (1, '222', '311'),
             (-1, '221', '312'),
             (1, '220', '313'),
             (1, '213', '320'),
             (-1, '212', '321'),
             (1, '211', '322'),
             (-1, '210', '323'),
             (-1, '203', '330'),
             (1, '202', '331'),
             (-1, '201', '332'),
             (1, '200', '333')),
            ((1, '111', '200'),
             (-1, '110', '201'),
             (1, '113', '202'),
             (-1, '112', '203'),
             (-1, '101', '210'),
             (1, '100', '211'),
             (-1, '103', '212'),
             (1, '102', '213'),
             (1, '131', '220'),
             (-1, '130', '221'),
             (1, '133', '222'),
             (-1, '132', '223'),
             (-1, '121', '230'),
             (1, '120', '231'),
             (-1, '123', '232'),
             (1, '122', '233'),
             (1, '011', '300'),
             (-1, '010', '301'),
             (1, '013', '302'),
             (-1, '012', '303'),
             (-1, '001', '310'),
             (1, '000', '311'),
             (-1, '003', '312'),
             (1, '002', '313'),
             (1, '031', '320'),
             (-1, '030', '321'),
             (1, '033', '322'),
             (-1, '032', '323'),
             (-1, '021', '330'),
             (1, '020', '331'),
             (-1, '023', '332'),
             (1, '022', '333')))),
 'I_23a': ((-4,
            ((1, '101', '110'),
             (-1, '100', '111'),
             (1, '103', '112'),
             (-1, '102', '113'),
             (1, '121', '130'),
             (-1, '120', '131'),
             (1, '123', '132'),
             (-1, '122', '133'),
             (1, '301', '310'),
             (-1, '300', '311'),
             (1, '303', '312'),
             (-1, '302', '313'),
             (1, '321', '330'),
             (-1, '320', '331'),
             (1, '323', '332'),
             (-1, '322', '333')),
            ((1, '011', '200'),
             (-1, '010', '201'),
             (1, '013', '202'),
             (-1, '012', '203'),
             (-1, '001', '210'),
             (1, '000', '211'),
             (-1, '003', '212'),
             (1, '002', '213'),
             (1, '031', '220'),
             (-1, '030', '221'),
             (1, '033', '222'),
             (-1, '032', '223'),
             (-1, '021', '230'),
             (1, '020', '231'),
             (-1, '023', '232'),
             (1, '022', '233'))),
           (-4,
            ((1, '001', '010'),
             (-1, '000', '011'),
             (1, '003', '012'),
             (-1, '002', '013'),
             (1, '021', '030'),
             (-1, '020', '031'),
             (1, '023', '032'),
             (-1, '022', '033'),
             (1, '201', '210'),
             (-1, '200', '211'),
             (1, '203', '212'),
             (-1, '202', '213'),
             (1, '221', '230'),
             (-1, '220', '231'),
             (1, '223', '232'),
             (-1, '222', '233')),
            ((1, '111', '300'),
             (-1, '110', '301'),
             (1, '113', '302'),
             (-1, '112', '303'),
             (-1, '101', '310'),
             (1, '100', '311'),
             (-1, '103', '312'),
             (1, '102', '313'),
             (1, '131', '320'),
             (-1, '130', '321'),
             (1, '133', '322'),
             (-1, '132', '323'),
             (-1, '121', '330'),
             (1, '120', '331'),
             (-1, '123', '332'),
             (1, '122', '333'))),
           (-2,
            ((1, '011', '100'),
             (-1, '010', '101'),
             (1, '013', '102'),
             (-1, '012', '103'),
             (-1, '001', '110'),
             (1, '000', '111'),
             (-1, '003', '112'),
             (1, '002', '113'),
             (1, '031', '120'),
             (-1, '030', '121'),
             (1, '033', '122'),
             (-1, '032', '123'),
             (-1, '021', '130'),
             (1, '020', '131'),
             (-1, '023', '132'),
             (1, '022', '133'),
             (1, '211', '300'),
             (-1, '210', '301'),
             (1, '213', '302'),
             (-1, '212', '303'),
             (-1, '201', '310'),
             (1, '200', '311'),
             (-1, '203', '312'),
             (1, '202', '313'),
             (1, '231', '320'),
             (-1, '230', '321'),
             (1, '233', '322'),
             (-1, '232', '323'),
             (-1, '221', '330'),
             (1, '220', '331'),
             (-1, '223', '332'),
             (1, '222', '333')),
            ((1, '111', '200'),
             (-1, '110', '201'),
             (1, '113', '202'),
             (-1, '112', '203'),
             (-1, '101', '210'),
             (1, '100', '211'),
             (-1, '103', '212'),
             (1, '102', '213'),
             (1, '131', '220'),
             (-1, '130', '221'),
             (1, '133', '222'),
             (-1, '132', '223'),
             (-1, '121', '230'),
             (1, '120', '231'),
             (-1, '123', '232'),
             (1, '122', '233'),
             (1, '011', '300'),
             (-1, '010', '301'),
             (1, '013', '302'),
             (-1, '012', '303'),
             (-1, '001', '310'),
             (1, '000', '311'),
             (-1, '003', '312'),
             (1, '002', '313'),
             (1, '031', '320'),
             (-1, '030', '321'),
             (1, '033', '322'),
             (-1, '032', '323'),
             (-1, '021', '330'),
             (1, '020', '331'),
             (-1, '023', '332'),
             (1, '022', '333')))),
 'I_2a': ((-2,
           ((1, '133', '200'),
            (-1, '132', '201'),
            (1, '131', '202'),
            (-1, '130', '203'),
            (-1, '123', '210'),
            (1, '122', '211'),
            (-1, '121', '212'),
            (1, '120', '213'),
            (1, '113', '220'),
            (-1, '112', '221'),
            (1, '111', '222'),
            (-1, '110', '223'),
            (-1, '103', '230'),
            (1, '102', '231'),
            (-1, '101', '232'),
            (1, '100', '233')),
           None),
          (-2,
           ((1, '033', '300'),
            (-1, '032', '301'),
            (1, '031', '302'),
            (-1, '030', '303'),
            (-1, '023', '310'),
            (1, '022', '311'),
            (-1, '021', '312'),
            (1, '020', '313'),
            (1, '013', '320'),
            (-1, '012', '321'),
            (1, '011', '322'),
            (-1, '010', '323'),
            (-1, '003', '330'),
            (1, '002', '331'),
            (-1, '001', '332'),
            (1, '000', '333')),
           None),
          (8,
           ((1, '113', '120'),
            (-1, '112', '121'),
            (1, '111', '122'),
            (-1, '110', '123'),
            (-1, '103', '130'),
            (1, '102', '131'),
            (-1, '101', '132'),
            (1, '100', '133')),
           ((1, '213', '220'),
            (-1, '212', '221'),
            (1, '211', '222'),
            (-1, '210', '223'),
            (-1, '203', '230'),
            (1, '202', '231'),
            (-1, '201', '232'),
            (1, '200', '233'))),
          (8,
           ((1, '013', '020'),
            (-1, '012', '021'),
            (1, '011', '022'),
            (-1, '010', '023'),
            (-1, '003', '030'),
            (1, '002', '031'),
            (-1, '001', '032'),
            (1, '000', '033')),
           ((1, '313', '320'),
            (-1, '312', '321'),
            (1, '311', '322'),
            (-1, '310', '323'),
            (-1, '303', '330'),
            (1, '302', '331'),
            (-1, '301', '332'),
            (1, '300', '333'))),
          (4,
           ((1, '033', '200'),
            (-1, '032', '201'),
            (1, '031', '202'),
            (-1, '030', '203'),
            (-1, '023', '210'),
            (1, '022', '211'),
            (-1, '021', '212'),
            (1, '020', '213'),
            (1, '013', '220'),
            (-1, '012', '221'),
            (1, '011', '222'),
            (-1, '010', '223'),
            (-1, '003', '230'),
            (1, '002', '231'),
            (-1, '001', '232'),
            (1, '000', '233')),
           ((1, '133', '300'),
            (-1, '132', '301'),
            (1, '131', '302'),
            (-1, '130', '303'),
            (-1, '123', '310'),
            (1, '122', '311'),
            (-1, '121', '312'),
            (1, '120', '313'),
            (1, '113', '320'),
            (-1, '112', '321'),
            (1, '111', '322'),
            (-1, '110', '323'),
            (-1, '103', '330'),
            (1, '102', '331'),
            (-1, '101', '332'),
            (1, '100', '333'))),
          (-4,
           ((1, '033', '100'),
            (-1, '032', '101'),
            (1, '031', '102'),
            (-1, '030', '103'),
            (-1, '023', '110'),
            (1, '022', '111'),
            (-1, '021', '112'),
            (1, '020', '113'),
            (1, '013', '120'),
            (-1, '012', '121'),
            (1, '011', '122'),
            (-1, '010', '123'),
            (-1, '003', '130'),
            (1, '002', '131'),
            (-1, '001', '132'),
            (1, '000', '133')),
           ((1, '233', '300'),
            (-1, '232', '301'),
            (1, '231', '302'),
            (-1, '230', '303'),
            (-1, '223', '310'),
            (1, '222', '311'),
            (-1, '221', '312'),
            (1, '220', '313'),
            (1, '213', '320'),
            (-1, '212', '321'),
            (1, '211', '322'),
            (-1, '210', '323'),
            (-1, '203', '330'),
            (1, '202', '331'),
            (-1, '201', '332'),
            (1, '200', '333')))),
 'I_2b': ((-2,
           ((1, '123', '210'),
            (-1, '122', '211'),
            (1, '121', '212'),
            (-1, '120', '213'),
            (1, '113', '220'),
            (-1, '112', '221'),
            (1, '111', '222'),
            (-1, '110', '223'),
            (-1, '023', '310'),
            (1, '022', '311'),
            (-1, '021', '312'),
            (1, '020', '313'),
            (-1, '013', '320'),
            (1, '012', '321'),
            (-1, '011', '322'),
            (1, '010', '323')),
           None),
          (-2,
           ((1, '133', '200'),
            (-1, '132', '201'),
            (1, '131', '202'),
            (-1, '130', '203'),
            (1, '103', '230'),
            (-1, '102', '231'),
            (1, '101', '232'),
            (-1, '100', '233'),
            (-1, '033', '300'),
            (1, '032', '301'),
            (-1, '031', '302'),
            (1, '030', '303'),
            (-1, '003', '330'),
            (1, '002', '331'),
            (-1, '001', '332'),
            (1, '000', '333')),
           None),
          (8,
           ((1, '113', '210'),
            (-1, '112', '211'),
            (1, '111', '212'),
            (-1, '110', '213'),
            (-1, '013', '310'),
            (1, '012', '311'),
            (-1, '011', '312'),
            (1, '010', '313')),
           ((1, '123', '220'),
            (-1, '122', '221'),
            (1, '121', '222'),
            (-1, '120', '223'),
            (-1, '023', '320'),
            (1, '022', '321'),
            (-1, '021', '322'),
            (1, '020', '323'))),
          (8,
           ((1, '103', '200'),
            (-1, '102', '201'),
            (1, '101', '202'),
            (-1, '100', '203'),
            (-1, '003', '300'),
            (1, '002', '301'),
            (-1, '001', '302'),
            (1, '000', '303')),
           ((1, '133', '230'),
            (-1, '132', '231'),
            (1, '131', '232'),
            (-1, '130', '233'),
            (-1, '033', '330'),
            (1, '032', '331'),
            (-1, '031', '332'),
            (1, '030', '333'))),
          (4,
           ((1, '123', '200'),
            (-1, '122', '201'),
            (1, '121', '202'),
            (-1, '120', '203'),
            (1, '103', '220'),
            (-1, '102', '221'),
            (1, '101', '222'),
            (-1, '100', '223'),
            (-1, '023', '300'),
            (1, '022', '301'),
            (-1, '021', '302'),
            (1, '020', '303'),
            (-1, '003', '320'),
            (1, '002', '321'),
            (-1, '001', '322'),
            (1, '000', '323')),
           ((1, '133', '210'),
            (-1, '132', '211'),
            (1, '131', '212'),
            (-1, '130', '213'),
            (1, '113', '230'),
            (-1, '112', '231'),
            (1, '111', '232'),
            (-1, '110', '233'),
            (-1, '033', '310'),
            (1, '032', '311'),
            (-1, '031', '312'),
            (1, '030', '313'),
            (-1, '013', '330'),
            (1, '012', '331'),
            (-1, '011', '332'),
            (1, '010', '333'))),
          (-4,
           ((1, '113', '200'),
            (-1, '112', '201'),
            (1, '111', '202'),
            (-1, '110', '203'),
            (1, '103', '210'),
            (-1, '102', '211'),
            (1, '101', '212'),
            (-1, '100', '213'),
            (-1, '013', '300'),
            (1, '012', '301'),
            (-1, '011', '302'),
            (1, '010', '303'),
            (-1, '003', '310'),
            (1, '002', '311'),
            (-1, '001', '312'),
            (1, '000', '313')),
           ((1, '133', '220'),
            (-1, '132', '221'),
            (1, '131', '222'),
            (-1, '130', '223'),
            (1, '123', '230'),
            (-1, '122', '231'),
            (1, '121', '232'),
            (-1, '120', '233'),
            (-1, '033', '320'),
            (1, '032', '321'),
            (-1, '031', '322'),
            (1, '030', '323'),
            (-1, '023', '330'),
            (1, '022', '331'),
            (-1, '021', '332'),
            (1, '020', '333')))),
 'I_2c': ((-2,
           ((1, '132', '201'),
            (1, '131', '202'),
            (-1, '122', '211'),
            (-1, '121', '212'),
            (1, '112', '221'),
            (1, '111', '222'),
            (-1, '102', '231'),
            (-1, '101', '232'),
            (-1, '032', '301'),
            (-1, '031', '302'),
            (1, '022', '311'),
            (1, '021', '312'),
            (-1, '012', '321'),
            (-1, '011', '322'),
            (1, '002', '331'),
            (1, '001', '332')),
           None),
          (-2,
           ((1, '133', '200'),
            (1, '130', '203'),
            (-1, '123', '210'),
            (-1, '120', '213'),
            (1, '113', '220'),
            (1, '110', '223'),
            (-1, '103', '230'),
            (-1, '100', '233'),
            (-1, '033', '300'),
            (-1, '030', '303'),
            (1, '023', '310'),
            (1, '020', '313'),
            (-1, '013', '320'),
            (-1, '010', '323'),
            (1, '003', '330'),
            (1, '000', '333')),
           None),
          (8,
           ((1, '131', '201'),
            (-1, '121', '211'),
            (1, '111', '221'),
            (-1, '101', '231'),
            (-1, '031', '301'),
            (1, '021', '311'),
            (-1, '011', '321'),
            (1, '001', '331')),
           ((1, '132', '202'),
            (-1, '122', '212'),
            (1, '112', '222'),
            (-1, '102', '232'),
            (-1, '032', '302'),
            (1, '022', '312'),
            (-1, '012', '322'),
            (1, '002', '332'))),
          (8,
           ((1, '130', '200'),
            (-1, '120', '210'),
            (1, '110', '220'),
            (-1, '100', '230'),
            (-1, '030', '300'),
            (1, '020', '310'),
            (-1, '010', '320'),
            (1, '000', '330')),
           ((1, '133', '203'),
            (-1, '123', '213'),
            (1, '113', '223'),
            (-1, '103', '233'),
            (-1, '033', '303'),
            (1, '023', '313'),
            (-1, '013', '323'),
            (1, '003', '333'))),
          (4,
           ((1, '132', '200'),
            (1, '130', '202'),
            (-1, '122', '210'),
            (-1, '120', '212'),
            (1, '112', '220'),
            (1, '110', '222'),
            (-1, '102', '230'),
            (-1, '100', '232'),
            (-1, '032', '300'),
            (-1, '030', '302'),
            (1, '022', '310'),
            (1, '020', '312'),
            (-1, '012', '320'),
            (-1, '010', '322'),
            (1, '002', '330'),
            (1, '000', '332')),
           ((1, '133', '201'),
            (1, '131', '203'),
            (-1, '123', '211'),
            (-1, '121', '213'),
            (1, '113', '221'),
            (1, '111', '223'),
            (-1, '103', '231'),
            (-1, '101', '233'),
            (-1, '033', '301'),
            (-1, '031', '303'),
            (1, '023', '311'),
            (1, '021', '313'),
            (-1, '013', '321'),
            (-1, '011', '323'),
            (1, '003', '331'),
            (1, '001', '333'))),
          (-4,
           ((1, '131', '200'),
            (1, '130', '201'),
            (-1, '121', '210'),
            (-1, '120', '211'),
            (1, '111', '220'),
            (1, '110', '221'),
            (-1, '101', '230'),
            (-1, '100', '231'),
            (-1, '031', '300'),
            (-1, '030', '301'),
            (1, '021', '310'),
            (1, '020', '311'),
            (-1, '011', '320'),
            (-1, '010', '321'),
            (1, '001', '330'),
            (1, '000', '331')),
           ((1, '133', '202'),
            (1, '132', '203'),
            (-1, '123', '212'),
            (-1, '122', '213'),
            (1, '113', '222'),
            (1, '112', '223'),
            (-1, '103', '232'),
            (-1, '102', '233'),
            (-1, '033', '302'),
            (-1, '032', '303'),
            (1, '023', '312'),
            (1, '022', '313'),
            (-1, '013', '322'),
            (-1, '012', '323'),
            (1, '003', '332'),
            (1, '002', '333')))),
 'I_35a': ((-4,
            ((1, '001', '010'),
             (-1, '000', '011'),
             (1, '003', '012'),
             (-1, '002', '013'),
             (1, '021', '030'),
             (-1, '020', '031'),
             (1, '023', '032'),
             (-1, '022', '033')),
            ((1, '113', '120'),
             (-1, '112', '121'),
             (1, '111', '122'),
             (-1, '110', '123'),
             (-1, '103', '130'),
             (1, '102', '131'),
             (-1, '101', '132'),
             (1, '100', '133'))),
           (-4,
            ((1, '013', '020'),
             (-1, '012', '021'),
             (1, '011', '022'),
             (-1, '010', '023'),
             (-1, '003', '030'),
             (1, '002', '031'),
             (-1, '001', '032'),
             (1, '000', '033')),
            ((1, '101', '110'),
             (-1, '100', '111'),
             (1, '103', '112'),
             (-1, '102', '113'),
             (1, '121', '130'),
             (-1, '120', '131'),
             (1, '123', '132'),
             (-1, '122', '133'))),
           (-4,
            ((1, '201', '210'),
             (-1, '200', '211'),
             (1, '203', '212'),
             (-1, '202', '213'),
             (1, '221', '230'),
             (-1, '220', '231'),
             (1, '223', '232'),
             (-1, '222', '233')),
            ((1, '313', '320'),
             (-1, '312', '321'),
             (1, '311', '322'),
             (-1, '310', '323'),
             (-1, '303', '330'),
             (1, '302', '331'),
             (-1, '301', '332'),
             (1, '300', '333'))),
           (-4,
            ((1, '213', '220'),
             (-1, '212', '221'),
             (1, '211', '222'),
             (-1, '210', '223'),
             (-1, '203', '230'),
             (1, '202', '231'),
             (-1, '201', '232'),
             (1, '200', '233')),
            ((1, '301', '310'),
             (-1, '300', '311'),
             (1, '303', '312'),
             (-1, '302', '313'),
             (1, '321', '330'),
             (-1, '320', '331'),
             (1, '323', '332'),
             (-1, '322', '333'))),
           (-2,
            ((1, '033', '100'),
             (-1, '032', '101'),
             (1, '031', '102'),
             (-1, '030', '103'),
             (-1, '023', '110'),
             (1, '022', '111'),
             (-1, '021', '112'),
             (1, '020', '113'),
             (1, '013', '120'),
             (-1, '012', '121'),
             (1, '011', '122'),
             (-1, '010', '123'),
             (-1, '003', '130'),
             (1, '002', '131'),
             (-1, '001', '132'),
             (1, '000', '133')),
            ((1, '011', '100'),
             (-1, '010', '101'),
             (1, '013', '102'),
             (-1, '012', '103'),
             (-1, '001', '110'),
             (1, '000', '111'),
             (-1, '003', '112'),
             (1, '002', '113'),
             (1, '031', '120'),
             (-1, '030', '121'),
             (1, '033', '122'),
             (-1, '032', '123'),
             (-1, '021', '130'),
             (1, '020', '131'),
             (-1, '023', '132'),
             (1, '022', '133'))),
           (-2,
            ((1, '111', '200'),
             (-1, '110', '201'),
             (1, '113', '202'),
             (-1, '112', '203'),
             (-1, '101', '210'),
             (1, '100', '211'),
             (-1, '103', '212'),
             (1, '102', '213'),
             (1, '131', '220'),
             (-1, '130', '221'),
             (1, '133', '222'),
             (-1, '132', '223'),
             (-1, '121', '230'),
             (1, '120', '231'),
             (-1, '123', '232'),
             (1, '122', '233')),
            ((1, '033', '300'),
             (-1, '032', '301'),
             (1, '031', '302'),
             (-1, '030', '303'),
             (-1, '023', '310'),
             (1, '022', '311'),
             (-1, '021', '312'),
             (1, '020', '313'),
             (1, '013', '320'),
             (-1, '012', '321'),
             (1, '011', '322'),
             (-1, '010', '323'),
             (-1, '003', '330'),
             (1, '002', '331'),
             (-1, '001', '332'),
             (1, '000', '333'))),
           (-2,
            ((1, '133', '200'),
             (-1, '132', '201'),
             (1, '131', '202'),
             (-1, '130', '203'),
             (-1, '123', '210'),
             (1, '122', '211'),
             (-1, '121', '212'),
             (1, '120', '213'),
             (1, '113', '220'),
             (-1, '112', '221'),
             (1, '111', '222'),
             (-1, '110', '223'),
             (-1, '103', '230'),
             (1, '102', '231'),
             (-1, '101', '232'),
             (1, '100', '233')),
            ((1, '011', '300'),
             (-1, '010', '301'),
             (1, '013', '302'),
             (-1, '012', '303'),
             (-1, '001', '310'),
             (1, '000', '311'),
             (-1, '003', '312'),
             (1, '002', '313'),
             (1, '031', '320'),
             (-1, '030', '321'),
             (1, '033', '322'),
             (-1, '032', '323'),
             (-1, '021', '330'),
             (1, '020', '331'),
             (-1, '023', '332'),
             (1, '022', '333'))),
           (2,
            ((1, '011', '200'),
             (-1, '010', '201'),
             (1, '013', '202'),
             (-1, '012', '203'),
             (-1, '001', '210'),
             (1, '000', '211'),
             (-1, '003', '212'),
             (1, '002', '213'),
             (1, '031', '220'),
             (-1, '030', '221'),
             (1, '033', '222'),
             (-1, '032', '223'),
             (-1, '021', '230'),
             (1, '020', '231'),
             (-1, '023', '232'),
             (1, '022', '233')),
            ((1, '133', '300'),
             (-1, '132', '301'),
             (1, '131', '302'),
             (-1, '130', '303'),
             (-1, '123', '310'),
             (1, '122', '311'),
             (-1, '121', '312'),
             (1, '120', '313'),
             (1, '113', '320'),
             (-1, '112', '321'),
             (1, '111', '322'),
             (-1, '110', '323'),
             (-1, '103', '330'),
             (1, '102', '331'),
             (-1, '101', '332'),
             (1, '100', '333'))),
           (2,
            ((1, '033', '200'),
             (-1, '032', '201'),
             (1, '031', '202'),
             (-1, '030', '203'),
             (-1, '023', '210'),
             (1, '022', '211'),
             (-1, '021', '212'),
             (1, '020', '213'),
             (1, '013', '220'),
             (-1, '012', '221'),
             (1, '011', '222'),
             (-1, '010', '223'),
             (-1, '003', '230'),
             (1, '002', '231'),
             (-1, '001', '232'),
             (1, '000', '233')),
            ((1, '111', '300'),
             (-1, '110', '301'),
             (1, '113', '302'),
             (-1, '112', '303'),
             (-1, '101', '310'),
             (1, '100', '311'),
             (-1, '103', '312'),
             (1, '102', '313'),
             (1, '131', '320'),
             (-1, '130', '321'),
             (1, '133', '322'),
             (-1, '132', '323'),
             (-1, '121', '330'),
             (1, '120', '331'),
             (-1, '123', '332'),
             (1, '122', '333'))),
           (-2,
            ((1, '233', '300'),
             (-1, '232', '301'),
             (1, '231', '302'),
             (-1, '230', '303'),
             (-1, '223', '310'),
             (1, '222', '311'),
             (-1, '221', '312'),
             (1, '220', '313'),
             (1, '213', '320'),
             (-1, '212', '321'),
             (1, '211', '322'),
             (-1, '210', '323'),
             (-1, '203', '330'),
             (1, '202', '331'),
             (-1, '201', '332'),
             (1, '200', '333')),
            ((1, '211', '300'),
             (-1, '210', '301'),
             (1, '213', '302'),
             (-1, '212', '303'),
             (-1, '201', '310'),
             (1, '200', '311'),
             (-1, '203', '312'),
             (1, '202', '313'),
             (1, '231', '320'),
             (-1, '230', '321'),
             (1, '233', '322'),
             (-1, '232', '323'),
             (-1, '221', '330'),
             (1, '220', '331'),
             (-1, '223', '332'),
             (1, '222', '333')))),
 'I_3a': ((-2,
           ((1, '011', '100'),
            (-1, '010', '101'),
            (1, '013', '102'),
            (-1, '012', '103'),
            (-1, '001', '110'),
            (1, '000', '111'),
            (-1, '003', '112'),
            (1, '002', '113'),
            (1, '031', '120'),
            (-1, '030', '121'),
            (1, '033', '122'),
            (-1, '032', '123'),
            (-1, '021', '130'),
            (1, '020', '131'),
            (-1, '023', '132'),
            (1, '022', '133')),
           None),
          (-2,
           ((1, '211', '300'),
            (-1, '210', '301'),
            (1, '213', '302'),
            (-1, '212', '303'),
            (-1, '201', '310'),
            (1, '200', '311'),
            (-1, '203', '312'),
            (1, '202', '313'),
            (1, '231', '320'),
            (-1, '230', '321'),
            (1, '233', '322'),
            (-1, '232', '323'),
            (-1, '221', '330'),
            (1, '220', '331'),
            (-1, '223', '332'),
            (1, '222', '333')),
           None),
          (8,
           ((1, '001', '010'),
            (-1, '000', '011'),
            (1, '003', '012'),
            (-1, '002', '013'),
            (1, '021', '030'),
            (-1, '020', '031'),
            (1, '023', '032'),
            (-1, '022', '033')),
           ((1, '101', '110'),
            (-1, '100', '111'),
            (1, '103', '112'),
            (-1, '102', '113'),
            (1, '121', '130'),
            (-1, '120', '131'),
            (1, '123', '132'),
            (-1, '122', '133'))),
          (8,
           ((1, '201', '210'),
            (-1, '200', '211'),
            (1, '203', '212'),
            (-1, '202', '213'),
            (1, '221', '230'),
            (-1, '220', '231'),
            (1, '223', '232'),
            (-1, '222', '233')),
           ((1, '301', '310'),
            (-1, '300', '311'),
            (1, '303', '312'),
            (-1, '302', '313'),
            (1, '321', '330'),
            (-1, '320', '331'),
            (1, '323', '332'),
            (-1, '322', '333'))),
          (-4,
           ((1, '111', '200'),
            (-1, '110', '201'),
            (1, '113', '202'),
            (-1, '112', '203'),
            (-1, '101', '210'),
            (1, '100', '211'),
            (-1, '103', '212'),
            (1, '102', '213'),
            (1, '131', '220'),
            (-1, '130', '221'),
            (1, '133', '222'),
            (-1, '132', '223'),
            (-1, '121', '230'),
            (1, '120', '231'),
            (-1, '123', '232'),
            (1, '122', '233')),
           ((1, '011', '300'),
            (-1, '010', '301'),
            (1, '013', '302'),
            (-1, '012', '303'),
            (-1, '001', '310'),
            (1, '000', '311'),
            (-1, '003', '312'),
            (1, '002', '313'),
            (1, '031', '320'),
            (-1, '030', '321'),
            (1, '033', '322'),
            (-1, '032', '323'),
            (-1, '021', '330'),
            (1, '020', '331'),
            (-1, '023', '332'),
            (1, '022', '333'))),
          (4,
           ((1, '011', '200'),
            (-1, '010', '201'),
            (1, '013', '202'),
            (-1, '012', '203'),
            (-1, '001', '210'),
            (1, '000', '211'),
            (-1, '003', '212'),
            (1, '002', '213'),
            (1, '031', '220'),
            (-1, '030', '221'),
            (1, '033', '222'),
            (-1, '032', '223'),
            (-1, '021', '230'),
            (1, '020', '231'),
            (-1, '023', '232'),
            (1, '022', '233')),
           ((1, '111', '300'),
            (-1, '110', '301'),
            (1, '113', '302'),
            (-1, '112', '303'),
            (-1, '101', '310'),
            (1, '100', '311'),
            (-1, '103', '312'),
            (1, '102', '313'),
            (1, '131', '320'),
            (-1, '130', '321'),
            (1, '133', '322'),
            (-1, '132', '323'),
            (-1, '121', '330'),
            (1, '120', '331'),
            (-1, '123', '332'),
            (1, '122', '333')))),
 'I_3b': ((-2,
           ((1, '011', '100'),
            (-1, '010', '101'),
            (1, '013', '102'),
            (-1, '012', '103'),
            (1, '001', '110'),
            (-1, '000', '111'),
            (1, '003', '112'),
            (-1, '002', '113'),
            (1, '211', '300'),
            (-1, '210', '301'),
            (1, '213', '302'),
            (-1, '212', '303'),
            (1, '201', '310'),
            (-1, '200', '311'),
            (1, '203', '312'),
            (-1, '202', '313')),
           None),
          (-2,
           ((1, '031', '120'),
            (-1, '030', '121'),
            (1, '033', '122'),
            (-1, '032', '123'),
            (1, '021', '130'),
            (-1, '020', '131'),
            (1, '023', '132'),
            (-1, '022', '133'),
            (1, '231', '320'),
            (-1, '230', '321'),
            (1, '233', '322'),
            (-1, '232', '323'),
            (1, '221', '330'),
            (-1, '220', '331'),
            (1, '223', '332'),
            (-1, '222', '333')),
           None),
          (8,
           ((1, '021', '120'),
            (-1, '020', '121'),
            (1, '023', '122'),
            (-1, '022', '123'),
            (1, '221', '320'),
            (-1, '220', '321'),
            (1, '223', '322'),
            (-1, '222', '323')),
           ((1, '031', '130'),
            (-1, '030', '131'),
            (1, '033', '132'),
            (-1, '032', '133'),
            (1, '231', '330'),
            (-1, '230', '331'),
            (1, '233', '332'),
            (-1, '232', '333'))),
          (8,
           ((1, '001', '100'),
            (-1, '000', '101'),
            (1, '003', '102'),
            (-1, '002', '103'),
            (1, '201', '300'),
            (-1, '200', '301'),
            (1, '203', '302'),
            (-1, '202', '303')),
           ((1, '011', '110'),
            (-1, '010', '111'),
            (1, '013', '112'),
            (-1, '012', '113'),
            (1, '211', '310'),
            (-1, '210', '311'),
            (1, '213', '312'),
            (-1, '212', '313'))),
          (-4,
           ((1, '021', '110'),
            (-1, '020', '111'),
            (1, '023', '112'),
            (-1, '022', '113'),
            (1, '011', '120'),
            (-1, '010', '121'),
            (1, '013', '122'),
            (-1, '012', '123'),
            (1, '221', '310'),
            (-1, '220', '311'),
            (1, '223', '312'),
            (-1, '222', '313'),
            (1, '211', '320'),
            (-1, '210', '321'),
            (1, '213', '322'),
            (-1, '212', '323')),
           ((1, '031', '100'),
            (-1, '030', '101'),
            (1, '033', '102'),
            (-1, '032', '103'),
            (1, '001', '130'),
            (-1, '000', '131'),
            (1, '003', '132'),
            (-1, '002', '133'),
            (1, '231', '300'),
            (-1, '230', '301'),
            (1, '233', '302'),
            (-1, '232', '303'),
            (1, '201', '330'),
            (-1, '200', '331'),
            (1, '203', '332'),
            (-1, '202', '333'))),
          (4,
           ((1, '021', '100'),
            (-1, '020', '101'),
            (1, '023', '102'),
            (-1, '022', '103'),
            (1, '001', '120'),
            (-1, '000', '121'),
            (1, '003', '122'),
            (-1, '002', '123'),
            (1, '221', '300'),
            (-1, '220', '301'),
            (1, '223', '302'),
            (-1, '222', '303'),
            (1, '201', '320'),
            (-1, '200', '321'),
            (1, '203', '322'),
            (-1, '202', '323')),
           ((1, '031', '110'),
            (-1, '030', '111'),
            (1, '033', '112'),
            (-1, '032', '113'),
            (1, '011', '130'),
            (-1, '010', '131'),
            (1, '013', '132'),
            (-1, '012', '133'),
            (1, '231', '310'),
            (-1, '230', '311'),
            (1, '233', '312'),
            (-1, '232', '313'),
            (1, '211', '330'),
            (-1, '210', '331'),
            (1, '213', '332'),
            (-1, '212', '333')))),
 'I_3c': ((-2,
           ((1, '011', '100'),
            (1, '010', '101'),
            (-1, '001', '110'),
            (-1, '000', '111'),
            (1, '031', '120'),
            (1, '030', '121'),
            (-1, '021', '130'),
            (-1, '020', '131'),
            (1, '211', '300'),
            (1, '210', '301'),
            (-1, '201', '310'),
            (-1, '200', '311'),
            (1, '231', '320'),
            (1, '230', '321'),
            (-1, '221', '330'),
            (-1, '220', '331')),
           None),
          (-2,
           ((1, '013', '102'),
            (1, '012', '103'),
            (-1, '003', '112'),
            (-1, '002', '113'),
            (1, '033', '122'),
            (1, '032', '123'),
            (-1, '023', '132'),
            (-1, '022', '133'),
            (1, '213', '302'),
            (1, '212', '303'),
            (-1, '203', '312'),
            (-1, '202', '313'),
            (1, '233', '322'),
            (1, '232', '323'),
            (-1, '223', '332'),
            (-1, '222', '333')),
           None),
          (8,
           ((1, '012', '102'),
            (-1, '002', '112'),
            (1, '032', '122'),
            (-1, '022', '132'),
            (1, '212', '302'),
            (-1, '202', '312'),
            (1, '232', '322'),
            (-1, '222', '332')),
           ((1, '013', '103'),
            (-1, '003', '113'),
            (1, '033', '123'),
            (-1, '023', '133'),
            (1, '213', '303'),
            (-1, '203', '313'),
            (1, '233', '323'),
            (-1, '223', '333'))),
          (8,
           ((1, '010', '100'),
            (-1, '000', '110'),
            (1, '030', '120'),
            (-1, '020', '130'),
            (1, '210', '300'),
            (-1, '200', '310'),
            (1, '230', '320'),
            (-1, '220', '330')),
           ((1, '011', '101'),
            (-1, '001', '111'),
            (1, '031', '121'),
            (-1, '021', '131'),
            (1, '211', '301'),
            (-1, '201', '311'),
            (1, '231', '321'),
            (-1, '221', '331'))),
          (-4,
           ((1, '012', '101'),
            (1, '011', '102'),
            (-1, '002', '111'),
            (-1, '001', '112'),
            (1, '032', '121'),
            (1, '031', '122'),
            (-1, '022', '131'),
            (-1, '021', '132'),
            (1, '212', '301'),
            (1, '211', '302'),
            (-1, '202', '311'),
            (-1, '201', '312'),
            (1, '232', '321'),
            (1, '231', '322'),
            (-1, '222', '331'),
            (-1, '221', '332')),
           ((1, '013', '100'),
            (1, '010', '103'),
            (-1, '003', '110'),
            (-1, '000', '113'),
            (1, '033', '120'),
            (1, '030', '123'),
            (-1, '023', '130'),
            (-1, '020', '133'),
            (1, '213', '300'),
            (1, '210', '303'),
            (-1, '203', '310'),
            (-1, '200', '313'),
            (1, '233', '320'),
            (1, '230', '323'),
            (-1, '223', '330'),
            (-1, '220', '333'))),
          (4,
           ((1, '012', '100'),
            (1, '010', '102'),
            (-1, '002', '110'),
            (-1, '000', '112'),
            (1, '032', '120'),
            (1, '030', '122'),
            (-1, '022', '130'),
            (-1, '020', '132'),
            (1, '212', '300'),
            (1, '210', '302'),
            (-1, '202', '310'),
            (-1, '200', '312'),
            (1, '232', '320'),
            (1, '230', '322'),
            (-1, '222', '330'),
            (-1, '220', '332')),
           ((1, '013', '101'),
            (1, '011', '103'),
            (-1, '003', '111'),
            (-1, '001', '113'),
            (1, '033', '121'),
            (1, '031', '123'),
            (-1, '023', '131'),
            (-1, '021', '133'),
            (1, '213', '301'),
            (1, '211', '303'),
            (-1, '203', '311'),
            (-1, '201', '313'),
            (1, '233', '321'),
            (1, '231', '323'),
            (-1, '223', '331'),
            (-1, '221', '333')))),
 'T_l': ((2,
          ((1, '0111', '1000'),
           (-1, '0110', '1001'),
           (1, '0113', '1002'),
           (-1, '0112', '1003'),
           (-1, '0101', '1010'),
           (1, '0100', '1011'),
           (-1, '0103', '1012'),
           (1, '0102', '1013'),
           (-1, '0011', '1100'),
           (1, '0010', '1101'),
           (-1, '0013', '1102'),
           (1, '0012', '1103'),
           (1, '0001', '1110'),
           (-1, '0000', '1111'),
           (1, '0003', '1112'),
           (-1, '0002', '1113'),
           (1, '0311', '1200'),
           (-1, '0310', '1201'),
           (1, '0313', '1202'),
           (-1, '0312', '1203'),
           (-1, '0301', '1210'),
           (1, '0300', '1211'),
           (-1, '0303', '1212'),
           (1, '0302', '1213'),
           (-1, '0211', '1300'),
           (1, '0210', '1301'),
           (-1, '0213', '1302'),
           (1, '0212', '1303'),
           (1, '0201', '1310'),
           (-1, '0200', '1311'),
           (1, '0203', '1312'),
           (-1, '0202', '1313'),
           (1, '2111', '3000'),
           (-1, '2110', '3001'),
           (1, '2113', '3002'),
           (-1, '2112', '3003'),
           (-1, '2101', '3010'),
           (1, '2100', '3011'),
           (-1, '2103', '3012'),
           (1, '2102', '3013'),
           (-1, '2011', '3100'),
           (1, '2010', '3101'),
           (-1, '2013', '3102'),
           (1, '2012', '3103'),
           (1, '2001', '3110'),
           (-1, '2000', '3111'),
           (1, '2003', '3112'),
           (-1, '2002', '3113'),
           (1, '2311', '3200'),
           (-1, '2310', '3201'),
           (1, '2313', '3202'),
           (-1, '2312', '3203'),
           (-1, '2301', '3210'),
           (1, '2300', '3211'),
           (-1, '2303', '3212'),
           (1, '2302', '3213'),
           (-1, '2211', '3300'),
           (1, '2210', '3301'),
           (-1, '2213', '3302'),
           (1, '2212', '3303'),
           (1, '2201', '3310'),
           (-1, '2200', '3311'),
           (1, '2203', '3312'),
           (-1, '2202', '3313')),
          None),
         (2,
          ((1, '0131', '1020'),
           (-1, '0130', '1021'),
           (1, '0133', '1022'),
           (-1, '0132', '1023'),
           (-1, '0121', '1030'),
           (1, '0120', '1031'),
           (-1, '0123', '1032'),
           (1, '0122', '1033'),
           (-1, '0031', '1120'),
           (1, '0030', '1121'),
           (-1, '0033', '1122'),
           (1, '0032', '1123'),
           (1, '0021', '1130'),
           (-1, '0020', '1131'),
           (1, '0023', '1132'),
           (-1, '0022', '1133'),
           (1, '0331', '1220'),
           (-1, '0330', '1221'),
           (1, '0333', '1222'),
           (-1, '0332', '1223'),
           (-1, '0321', '1230'),
           (1, '0320', '1231'),
           (-1, '0323', '1232'),
           (1, '0322', '1233'),
           (-1, '0231', '1320'),
           (1, '0230', '1321'),
           (-1, '0233', '1322'),
           (1, '0232', '1323'),
           (1, '0221', '1330'),
           (-1, '0220', '1331'),
           (1, '0223', '1332'),
           (-1, '0222', '1333'),
           (1, '2131', '3020'),
           (-1, '2130', '3021'),
           (1, '2133', '3022'),
           (-1, '2132', '3023'),
           (-1, '2121', '3030'),
           (1, '2120', '3031'),
           (-1, '2123', '3032'),
           (1, '2122', '3033'),
           (-1, '2031', '3120'),
           (1, '2030', '3121'),
           (-1, '2033', '3122'),
           (1, '2032', '3123'),
           (1, '2021', '3130'),
           (-1, '2020', '3131'),
           (1, '2023', '3132'),
           (-1, '2022', '3133'),
           (1, '2331', '3220'),
           (-1, '2330', '3221'),
           (1, '2333', '3222'),
           (-1, '2332', '3223'),
           (-1, '2321', '3230'),
           (1, '2320', '3231'),
           (-1, '2323', '3232'),
           (1, '2322', '3233'),
           (-1, '2231', '3320'),
           (1, '2230', '3321'),
           (-1, '2233', '3322'),
           (1, '2232', '3323'),
           (1, '2221', '3330'),
           (-1, '2220', '3331'),
           (1, '2223', '3332'),
           (-1, '2222', '3333')),
          None),
         (4,
          ((-1, '0121', '1010'),
           (1, '0120', '1011'),
           (-1, '0123', '1012'),
           (1, '0122', '1013'),
           (1, '0111', '1020'),
           (-1, '0110', '1021'),
           (1, '0113', '1022'),
           (-1, '0112', '1023'),
           (1, '0021', '1110'),
           (-1, '0020', '1111'),
           (1, '0023', '1112'),
           (-1, '0022', '1113'),
           (-1, '0011', '1120'),
           (1, '0010', '1121'),
           (-1, '0013', '1122'),
           (1, '0012', '1123'),
           (-1, '0321', '1210'),
           (1, '0320', '1211'),
           (-1, '0323', '1212'),
           (1, '0322', '1213'),
           (1, '0311', '1220'),
           (-1, '0310', '1221'),
           (1, '0313', '1222'),
           (-1, '0312', '1223'),
           (1, '0221', '1310'),
           (-1, '0220', '1311'),
           (1, '0223', '1312'),
           (-1, '0222', '1313'),
           (-1, '0211', '1320'),
           (1, '0210', '1321'),
           (-1, '0213', '1322'),
           (1, '0212', '1323'),
           (-1, '2121', '3010'),
           (1, '2120', '3011'),
           (-1, '2123', '3012'),
           (1, '2122', '3013'),
           (1, '2111', '3020'),
           (-1, '2110', '3021'),
           (1, '2113', '3022'),
           (-1, '2112', '3023'),
           (1, '2021', '3110'),
           (-1, '2020', '3111'),
           (1, '2023', '3112'),
           (-1, '2022', '3113'),
           (-1, '2011', '3120'),
           (1, '2010', '3121'),
           (-1, '2013', '3122'),
           (1, '2012', '3123'),
           (-1, '2321', '3210'),
           (1, '2320', '3211'),
           (-1, '2323', '3212'),
           (1, '2322', '3213'),
           (1, '2311', '3220'),
           (-1, '2310', '3221'),
           (1, '2313', '3222'),
           (-1, '2312', '3223'),
           (1, '2221', '3310'),
           (-1, '2220', '3311'),
           (1, '2223', '3312'),
           (-1, '2222', '3313'),
           (-1, '2211', '3320'),
           (1, '2210', '3321'),
           (-1, '2213', '3322'),
           (1, '2212', '3323')),
          ((1, '0131', '1000'),
           (-1, '0130', '1001'),
           (1, '0133', '1002'),
           (-1, '0132', '1003'),
           (-1, '0101', '1030'),
           (1, '0100', '1031'),
           (-1, '0103', '1032'),
           (1, '0102', '1033'),
           (-1, '0031', '1100'),
           (1, '0030', '1101'),
           (-1, '0033', '1102'),
           (1, '0032', '1103'),
           (1, '0001', '1130'),
           (-1, '0000', '1131'),
           (1, '0003', '1132'),
           (-1, '0002', '1133'),
           (1, '0331', '1200'),
           (-1, '0330', '1201'),
           (1, '0333', '1202'),
           (-1, '0332', '1203'),
           (-1, '0301', '1230'),
           (1, '0300', '1231'),
           (-1, '0303', '1232'),
           (1, '0302', '1233'),
           (-1, '0231', '1300'),
           (1, '0230', '1301'),
           (-1, '0233', '1302'),
           (1, '0232', '1303'),
           (1, '0201', '1330'),
           (-1, '0200', '1331'),
           (1, '0203', '1332'),
           (-1, '0202', '1333'),
           (1, '2131', '3000'),
           (-1, '2130', '3001'),
           (1, '2133', '3002'),
           (-1, '2132', '3003'),
           (-1, '2101', '3030'),
           (1, '2100', '3031'),
           (-1, '2103', '3032'),
           (1, '2102', '3033'),
           (-1, '2031', '3100'),
           (1, '2030', '3101'),
           (-1, '2033', '3102'),
           (1, '2032', '3103'),
           (1, '2001', '3130'),
           (-1, '2000', '3131'),
           (1, '2003', '3132'),
           (-1, '2002', '3133'),
           (1, '2331', '3200'),
           (-1, '2330', '3201'),
           (1, '2333', '3202'),
           (-1, '2332', '3203'),
           (-1, '2301', '3230'),
           (1, '2300', '3231'),
           (-1, '2303', '3232'),
           (1, '2302', '3233'),
           (-1, '2231', '3300'),
           (1, '2230', '3301'),
           (-1, '2233', '3302'),
           (1, '2232', '3303'),
           (1, '2201', '3330'),
           (-1, '2200', '3331'),
           (1, '2203', '3332'),
           (-1, '2202', '3333'))),
         (4,
          ((1, '0121', '1000'),
           (-1, '0120', '1001'),
           (1, '0123', '1002'),
           (-1, '0122', '1003'),
           (-1, '0101', '1020'),
           (1, '0100', '1021'),
           (-1, '0103', '1022'),
           (1, '0102', '1023'),
           (-1, '0021', '1100'),
           (1, '0020', '1101'),
           (-1, '0023', '1102'),
           (1, '0022', '1103'),
           (1, '0001', '1120'),
           (-1, '0000', '1121'),
           (1, '0003', '1122'),
           (-1, '0002', '1123'),
           (1, '0321', '1200'),
           (-1, '0320', '1201'),
           (1, '0323', '1202'),
           (-1, '0322', '1203'),
           (-1, '0301', '1220'),
           (1, '0300', '1221'),
           (-1, '0303', '1222'),
           (1, '0302', '1223'),
           (-1, '0221', '1300'),
           (1, '0220', '1301'),
           (-1, '0223', '1302'),
           (1, '0222', '1303'),
           (1, '0201', '1320'),
           (-1, '0200', '1321'),
           (1, '0203', '1322'),
           (-1, '0202', '1323'),
           (1, '2121', '3000'),
           (-1, '2120', '3001'),
           (1, '2123', '3002'),
           (-1, '2122', '3003'),
           (-1, '2101', '3020'),
           (1, '2100', '3021'),
           (-1, '2103', '3022'),
           (1, '2102', '3023'),
           (-1, '2021', '3100'),
           (1, '2020', '3101'),
           (-1, '2023', '3102'),
           (1, '2022', '3103'),
           (1, '2001', '3120'),
           (-1, '2000', '3121'),
           (1, '2003', '3122'),
           (-1, '2002', '3123'),
           (1, '2321', '3200'),
           (-1, '2320', '3201'),
           (1, '2323', '3202'),
           (-1, '2322', '3203'),
           (-1, '2301', '3220'),
           (1, '2300', '3221'),
           (-1, '2303', '3222'),
           (1, '2302', '3223'),
           (-1, '2221', '3300'),
           (1, '2220', '3301'),
           (-1, '2223', '3302'),
           (1, '2222', '3303'),
           (1, '2201', '3320'),
           (-1, '2200', '3321'),
           (1, '2203', '3322'),
           (-1, '2202', '3323')),
          ((1, '0131', '1010'),
           (-1, '0130', '1011'),
           (1, '0133', '1012'),
           (-1, '0132', '1013'),
           (-1, '0111', '1030'),
           (1, '0110', '1031'),
           (-1, '0113', '1032'),
           (1, '0112', '1033'),
           (-1, '0031', '1110'),
           (1, '0030', '1111'),
           (-1, '0033', '1112'),
           (1, '0032', '1113'),
           (1, '0011', '1130'),
           (-1, '0010', '1131'),
           (1, '0013', '1132'),
           (-1, '0012', '1133'),
           (1, '0331', '1210'),
           (-1, '0330', '1211'),
           (1, '0333', '1212'),
           (-1, '0332', '1213'),
           (-1, '0311', '1230'),
           (1, '0310', '1231'),
           (-1, '0313', '1232'),
           (1, '0312', '1233'),
           (-1, '0231', '1310'),
           (1, '0230', '1311'),
           (-1, '0233', '1312'),
           (1, '0232', '1313'),
           (1, '0211', '1330'),
           (-1, '0210', '1331'),
           (1, '0213', '1332'),
           (-1, '0212', '1333'),
           (1, '2131', '3010'),
           (-1, '2130', '3011'),
           (1, '2133', '3012'),
           (-1, '2132', '3013'),
           (-1, '2111', '3030'),
           (1, '2110', '3031'),
           (-1, '2113', '3032'),
           (1, '2112', '3033'),
           (-1, '2031', '3110'),
           (1, '2030', '3111'),
           (-1, '2033', '3112'),
           (1, '2032', '3113'),
           (1, '2011', '3130'),
           (-1, '2010', '3131'),
           (1, '2013', '3132'),
           (-1, '2012', '3133'),
           (1, '2331', '3210'),
           (-1, '2330', '3211'),
           (1, '2333', '3212'),
           (-1, '2332', '3213'),
           (-1, '2311', '3230'),
           (1, '2310', '3231'),
           (-1, '2313', '3232'),
           (1, '2312', '3233'),
           (-1, '2231', '3310'),
           (1, '2230', '3311'),
           (-1, '2233', '3312'),
           (1, '2232', '3313'),
           (1, '2211', '3330'),
           (-1, '2210', '3331'),
           (1, '2213', '3332'),
           (-1, '2212', '3333')))),
 'Y_l': ((2,
          ((-1, '1323', '2010'),
           (1, '1322', '2011'),
           (-1, '1321', '2012'),
           (1, '1320', '2013'),
           (1, '1313', '2020'),
           (-1, '1312', '2021'),
           (1, '1311', '2022'),
           (-1, '1310', '2023'),
           (1, '1223', '2110'),
           (-1, '1222', '2111'),
           (1, '1221', '2112'),
           (-1, '1220', '2113'),
           (-1, '1213', '2120'),
           (1, '1212', '2121'),
           (-1, '1211', '2122'),
           (1, '1210', '2123'),
           (-1, '1123', '2210'),
           (1, '1122', '2211'),
           (-1, '1121', '2212'),
           (1, '1120', '2213'),
           (1, '1113', '2220'),
           (-1, '1112', '2221'),
           (1, '1111', '2222'),
           (-1, '1110', '2223'),
           (1, '1023', '2310'),
           (-1, '1022', '2311'),
           (1, '1021', '2312'),
           (-1, '1020', '2313'),
           (-1, '1013', '2320'),
           (1, '1012', '2321'),
           (-1, '1011', '2322'),
           (1, '1010', '2323'),
           (1, '0323', '3010'),
           (-1, '0322', '3011'),
           (1, '0321', '3012'),
           (-1, '0320', '3013'),
           (-1, '0313', '3020'),
           (1, '0312', '3021'),
           (-1, '0311', '3022'),
           (1, '0310', '3023'),
           (-1, '0223', '3110'),
           (1, '0222', '3111'),
           (-1, '0221', '3112'),
           (1, '0220', '3113'),
           (1, '0213', '3120'),
           (-1, '0212', '3121'),
           (1, '0211', '3122'),
           (-1, '0210', '3123'),
           (1, '0123', '3210'),
           (-1, '0122', '3211'),
           (1, '0121', '3212'),
           (-1, '0120', '3213'),
           (-1, '0113', '3220'),
           (1, '0112', '3221'),
           (-1, '0111', '3222'),
           (1, '0110', '3223'),
           (-1, '0023', '3310'),
           (1, '0022', '3311'),
           (-1, '0021', '3312'),
           (1, '0020', '3313'),
           (1, '0013', '3320'),
           (-1, '0012', '3321'),
           (1, '0011', '3322'),
           (-1, '0010', '3323')),
          None),
         (2,
          ((-1, '1333', '2000'),
           (1, '1332', '2001'),
           (-1, '1331', '2002'),
           (1, '1330', '2003'),
           (1, '1303', '2030'),
           (-1, '1302', '2031'),
           (1, '1301', '2032'),
           (-1, '1300', '2033'),
           (1, '1233', '2100'),
           (-1, '1232', '2101'),
           (1, '1231', '2102'),
           (-1, '1230', '2103'),
           (-1, '1203', '2130'),
           (1, '1202', '2131'),
           (-1, '1201', '2132'),
           (1, '1200', '2133'),
           (-1, '1133', '2200'),
           (1, '1132', '2201'),
           (-1, '1131', '2202'),
           (1, '1130', '2203'),
           (1, '1103', '2230'),
           (-1, '1102', '2231'),
           (1, '1101', '2232'),
           (-1, '1100', '2233'),
           (1, '1033', '2300'),
           (-1, '1032', '2301'),
           (1, '1031', '2302'),
           (-1, '1030', '2303'),
           (-1, '1003', '2330'),
           (1, '1002', '2331'),
           (-1, '1001', '2332'),
           (1, '1000', '2333'),
           (1, '0333', '3000'),
           (-1, '0332', '3001'),
           (1, '0331', '3002'),
           (-1, '0330', '3003'),
           (-1, '0303', '3030'),
           (1, '0302', '3031'),
           (-1, '0301', '3032'),
           (1, '0300', '3033'),
           (-1, '0233', '3100'),
           (1, '0232', '3101'),
           (-1, '0231', '3102'),
           (1, '0230', '3103'),
           (1, '0203', '3130'),
           (-1, '0202', '3131'),
           (1, '0201', '3132'),
           (-1, '0200', '3133'),
           (1, '0133', '3200'),
           (-1, '0132', '3201'),
           (1, '0131', '3202'),
           (-1, '0130', '3203'),
           (-1, '0103', '3230'),
           (1, '0102', '3231'),
           (-1, '0101', '3232'),
           (1, '0100', '3233'),
           (-1, '0033', '3300'),
           (1, '0032', '3301'),
           (-1, '0031', '3302'),
           (1, '0030', '3303'),
           (1, '0003', '3330'),
           (-1, '0002', '3331'),
           (1, '0001', '3332'),
           (-1, '0000', '3333')),
          None),
         (4,
          ((1, '1323', '2000'),
           (-1, '1322', '2001'),
           (1, '1321', '2002'),
           (-1, '1320', '2003'),
           (-1, '1303', '2020'),
           (1, '1302', '2021'),
           (-1, '1301', '2022'),
           (1, '1300', '2023'),
           (-1, '1223', '2100'),
           (1, '1222', '2101'),
           (-1, '1221', '2102'),
           (1, '1220', '2103'),
           (1, '1203', '2120'),
           (-1, '1202', '2121'),
           (1, '1201', '2122'),
           (-1, '1200', '2123'),
           (1, '1123', '2200'),
           (-1, '1122', '2201'),
           (1, '1121', '2202'),
           (-1, '1120', '2203'),
           (-1, '1103', '2220'),
           (1, '1102', '2221'),
           (-1, '1101', '2222'),
           (1, '1100', '2223'),
           (-1, '1023', '2300'),
           (1, '1022', '2301'),
           (-1, '1021', '2302'),
           (1, '1020', '2303'),
           (1, '1003', '2320'),
           (-1, '1002', '2321'),
           (1, '1001', '2322'),
           (-1, '1000', '2323'),
           (-1, '0323', '3000'),
           (1, '0322', '3001'),
           (-1, '0321', '3002'),
           (1, '0320', '3003'),
           (1, '0303', '3020'),
           (-1, '0302', '3021'),
           (1, '0301', '3022'),
           (-1, '0300', '3023'),
           (1, '0223', '3100'),
           (-1, '0222', '3101'),
           (1, '0221', '3102'),
           (-1, '0220', '3103'),
           (-1, '0203', '3120'),
           (1, '0202', '3121'),
           (-1, '0201', '3122'),
           (1, '0200', '3123'),
           (-1, '0123', '3200'),
           (1, '0122', '3201'),
           (-1, '0121', '3202'),
           (1, '0120', '3203'),
           (1, '0103', '3220'),
           (-1, '0102', '3221'),
           (1, '0101', '3222'),
           (-1, '0100', '3223'),
           (1, '0023', '3300'),
           (-1, '0022', '3301'),
           (1, '0021', '3302'),
           (-1, '0020', '3303'),
           (-1, '0003', '3320'),
           (1, '0002', '3321'),
           (-1, '0001', '3322'),
           (1, '0000', '3323')),
          ((-1, '1333', '2010'),
           (1, '1332', '2011'),
           (-1, '1331', '2012'),
           (1, '1330', '2013'),
           (1, '1313', '2030'),
           (-1, '1312', '2031'),
           (1, '1311', '2032'),
           (-1, '1310', '2033'),
           (1, '1233', '2110'),
           (-1, '1232', '2111'),
           (1, '1231', '2112'),
           (-1, '1230', '2113'),
           (-1, '1213', '2130'),
           (1, '1212', '2131'),
           (-1, '1211', '2132'),
           (1, '1210', '2133'),
           (-1, '1133', '2210'),
           (1, '1132', '2211'),
           (-1, '1131', '2212'),
           (1, '1130', '2213'),
           (1, '1113', '2230'),
           (-1, '1112', '2231'),
           (1, '1111', '2232'),
           (-1, '1110', '2233'),
           (1, '1033', '2310'),
           (-1, '1032', '2311'),
           (1, '1031', '2312'),
           (-1, '1030', '2313'),
           (-1, '1013', '2330'),
           (1, '1012', '2331'),
           (-1, '1011', '2332'),
           (1, '1010', '2333'),
           (1, '0333', '3010'),
           (-1, '0332', '3011'),
           (1, '0331', '3012'),
           (-1, '0330', '3013'),
           (-1, '0313', '3030'),
           (1, '0312', '3031'),
           (-1, '0311', '3032'),
           (1, '0310', '3033'),
           (-1, '0233', '3110'),
           (1, '0232', '3111'),
           (-1, '0231', '3112'),
           (1, '0230', '3113'),
           (1, '0213', '3130'),
           (-1, '0212', '3131'),
           (1, '0211', '3132'),
           (-1, '0210', '3133'),
           (1, '0133', '3210'),
           (-1, '0132', '3211'),
           (1, '0131', '3212'),
           (-1, '0130', '3213'),
           (-1, '0113', '3230'),
           (1, '0112', '3231'),
           (-1, '0111', '3232'),
           (1, '0110', '3233'),
           (-1, '0033', '3310'),
           (1, '0032', '3311'),
           (-1, '0031', '3312'),
           (1, '0030', '3313'),
           (1, '0013', '3330'),
           (-1, '0012', '3331'),
           (1, '0011', '3332'),
           (-1, '0010', '3333'))),
         (4,
          ((-1, '1313', '2000'),
           (1, '1312', '2001'),
           (-1, '1311', '2002'),
           (1, '1310', '2003'),
           (1, '1303', '2010'),
           (-1, '1302', '2011'),
           (1, '1301', '2012'),
           (-1, '1300', '2013'),
           (1, '1213', '2100'),
           (-1, '1212', '2101'),
           (1, '1211', '2102'),
           (-1, '1210', '2103'),
           (-1, '1203', '2110'),
           (1, '1202', '2111'),
           (-1, '1201', '2112'),
           (1, '1200', '2113'),
           (-1, '1113', '2200'),
           (1, '1112', '2201'),
           (-1, '1111', '2202'),
           (1, '1110', '2203'),
           (1, '1103', '2210'),
           (-1, '1102', '2211'),
           (1, '1101', '2212'),
           (-1, '1100', '2213'),
           (1, '1013', '2300'),
           (-1, '1012', '2301'),
           (1, '1011', '2302'),
           (-1, '1010', '2303'),
           (-1, '1003', '2310'),
           (1, '1002', '2311'),
           (-1, '1001', '2312'),
           (1, '1000', '2313'),
           (1, '0313', '3000'),
           (-1, '0312', '3001'),
           (1, '0311', '3002'),
           (-1, '0310', '3003'),
           (-1, '0303', '3010'),
           (1, '0302', '3011'),
           (-1, '0301', '3012'),
           (1, '0300', '3013'),
           (-1, '0213', '3100'),
           (1, '0212', '3101'),
           (-1, '0211', '3102'),
           (1, '0210', '3103'),
           (1, '0203', '3110'),
           (-1, '0202', '3111'),
           (1, '0201', '3112'),
           (-1, '0200', '3113'),
           (1, '0113', '3200'),
           (-1, '0112', '3201'),
           (1, '0111', '3202'),
           (-1, '0110', '3203'),
           (-1, '0103', '3210'),
           (1, '0102', '3211'),
           (-1, '0101', '3212'),
           (1, '0100', '3213'),
           (-1, '0013', '3300'),
           (1, '0012', '3301'),
           (-1, '0011', '3302'),
           (1, '0010', '3303'),
           (1, '0003', '3310'),
           (-1, '0002', '3311'),
           (1, '0001', '3312'),
           (-1, '0000', '3313')),
          ((-1, '1333', '2020'),
           (1, '1332', '2021'),
           (-1, '1331', '2022'),
           (1, '1330', '2023'),
           (1, '1323', '2030'),
           (-1, '1322', '2031'),
           (1, '1321', '2032'),
           (-1, '1320', '2033'),
           (1, '1233', '2120'),
           (-1, '1232', '2121'),
           (1, '1231', '2122'),
           (-1, '1230', '2123'),
           (-1, '1223', '2130'),
           (1, '1222', '2131'),
           (-1, '1221', '2132'),
           (1, '1220', '2133'),
           (-1, '1133', '2220'),
           (1, '1132', '2221'),
           (-1, '1131', '2222'),
           (1, '1130', '2223'),
           (1, '1123', '2230'),
           (-1, '1122', '2231'),
           (1, '1121', '2232'),
           (-1, '1120', '2233'),
           (1, '1033', '2320'),
           (-1, '1032', '2321'),
           (1, '1031', '2322'),
           (-1, '1030', '2323'),
           (-1, '1023', '2330'),
           (1, '1022', '2331'),
           (-1, '1021', '2332'),
           (1, '1020', '2333'),
           (1, '0333', '3020'),
           (-1, '0332', '3021'),
           (1, '0331', '3022'),
           (-1, '0330', '3023'),
           (-1, '0323', '3030'),
           (1, '0322', '3031'),
           (-1, '0321', '3032'),
           (1, '0320', '3033'),
           (-1, '0233', '3120'),
           (1, '0232', '3121'),
           (-1, '0231', '3122'),
           (1, '0230', '3123'),
           (1, '0223', '3130'),
           (-1, '0222', '3131'),
           (1, '0221', '3132'),
           (-1, '0220', '3133'),
           (1, '0133', '3220'),
           (-1, '0132', '3221'),
           (1, '0131', '3222'),
           (-1, '0130', '3223'),
           (-1, '0123', '3230'),
           (1, '0122', '3231'),
           (-1, '0121', '3232'),
           (1, '0120', '3233'),
           (-1, '0033', '3320'),
           (1, '0032', '3321'),
           (-1, '0031', '3322'),
           (1, '0030', '3323'),
           (1, '0023', '3330'),
           (-1, '0022', '3331'),
           (1, '0021', '3332'),
           (-1, '0020', '3333'))))}

QUBIT = \
{'H': ((1, ('0000', '1111')),
       (-1, ('0111', '1000')),
       (1, ('0110', '1001')),
       (1, ('0101', '1010')),
       (-1, ('0100', '1011')),
       (1, ('0011', '1100')),
       (-1, ('0010', '1101')),
       (-1, ('0001', '1110'))),
 'L': ((1, ('0011', '0110', '1001', '1100')),
       (-1, ('0010', '0111', '1001', '1100')),
       (-1, ('0011', '0101', '1010', '1100')),
       (1, ('0001', '0111', '1010', '1100')),
       (1, ('0010', '0101', '1011', '1100')),
       (-1, ('0001', '0110', '1011', '1100')),
       (-1, ('0011', '0110', '1000', '1101')),
       (1, ('0010', '0111', '1000', '1101')),
       (1, ('0011', '0100', '1010', '1101')),
       (-1, ('0000', '0111', '1010', '1101')),
       (-1, ('0010', '0100', '1011', '1101')),
       (1, ('0000', '0110', '1011', '1101')),
       (1, ('0011', '0101', '1000', '1110')),
       (-1, ('0001', '0111', '1000', '1110')),
       (-1, ('0011', '0100', '1001', '1110')),
       (1, ('0000', '0111', '1001', '1110')),
       (1, ('0001', '0100', '1011', '1110')),
       (-1, ('0000', '0101', '1011', '1110')),
       (-1, ('0010', '0101', '1000', '1111')),
       (1, ('0001', '0110', '1000', '1111')),
       (1, ('0010', '0100', '1001', '1111')),
       (-1, ('0000', '0110', '1001', '1111')),
       (-1, ('0001', '0100', '1010', '1111')),
       (1, ('0000', '0101', '1010', '1111'))),
 'M': ((-1, ('0101', '0110', '1001', '1010')),
       (1, ('0100', '0111', '1001', '1010')),
       (1, ('0101', '0110', '1000', '1011')),
       (-1, ('0100', '0111', '1000', '1011')),
       (1, ('0011', '0101', '1010', '1100')),
       (-1, ('0001', '0111', '1010', '1100')),
       (-1, ('0010', '0101', '1011', '1100')),
       (1, ('0000', '0111', '1011', '1100')),
       (-1, ('0011', '0100', '1010', '1101')),
       (1, ('0001', '0110', '1010', '1101')),
       (1, ('0010', '0100', '1011', '1101')),
       (-1, ('0000', '0110', '1011', '1101')),
       (-1, ('0011', '0101', '1000', '1110')),
       (1, ('0001', '0111', '1000', '1110')),
       (1, ('0010', '0101', '1001', '1110')),
       (-1, ('0000', '0111', '1001', '1110')),
       (-1, ('0001', '0010', '1101', '1110')),
       (1, ('0000', '0011', '1101', '1110')),
       (1, ('0011', '0100', '1000', '1111')),
       (-1, ('0001', '0110', '1000', '1111')),
       (-1, ('0010', '0100', '1001', '1111')),
       (1, ('0000', '0110', '1001', '1111')),
       (1, ('0001', '0010', '1100', '1111')),
       (-1, ('0000', '0011', '1100', '1111'))),
 'tau6': ((1, ('000000', '111111')),
          (-1, ('011111', '100000')),
          (-1, ('101111', '010000')),
          (-1, ('110111', '001000')),
          (-1, ('111011', '000100')),
          (-1, ('111101', '000010')),
          (-1, ('111110', '000001')),
          (1, ('001111', '110000')),
          (1, ('010111', '101000')),
          (1, ('011011', '100100')),
          (1, ('011101', '100010')),
          (1, ('011110', '100001')),
          (1, ('100111', '011000')),
          (1, ('101011', '010100')),
          (1, ('101101', '010010')),
          (1, ('101110', '010001')),
          (1, ('110011', '001100')),
          (1, ('110101', '001010')),
          (1, ('110110', '001001')),
          (1, ('111001', '000110')),
          (1, ('111010', '000101')),
          (1, ('111100', '000011')),
          (-1, ('111000', '000111')),
          (-1, ('110100', '001011')),
          (-1, ('110010', '001101')),
          (-1, ('110001', '001110')),
          (-1, ('101100', '010011')),
          (-1, ('101010', '010101')),
          (-1, ('101001', '010110')),
          (-1, ('100110', '011001')),
          (-1, ('100101', '011010')),
          (-1, ('100011', '011100')))}
