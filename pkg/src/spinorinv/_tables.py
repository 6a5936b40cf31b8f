"""Named contraction patterns, catalogs and linear-dependence tables.

Generated data tables; do not edit by hand.
"""

PATTERNS3 = \
[('I_a',
  (('X', 'ij'), ('X', 'mk'), ('X', 'nl'), ('X', 'qr'), ('X', 'ps'), ('X', 'ut')),
  ('jkl', 'qmn', 'rst', 'ipu')),
 ('I_b',
  (('X', 'ij'), ('X', 'mk'), ('X', 'nl'), ('X', 'qr'), ('X', 'ps'), ('X', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_c',
  (('X', 'ij'), ('X', 'mk'), ('X', 'nl'), ('X', 'qr'), ('X', 'ps'), ('X', 'ut')),
  ('jkl', 'imu', 'rst', 'qpn')),
 ('I_d',
  (('X', 'ij'), ('X', 'mk'), ('X', 'nl'), ('X', 'qr'), ('X', 'ps'), ('X', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu'))]

CATALOG3 = \
[('I_2a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'pr'), ('C5', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_2b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_2c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C5', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_2d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_3a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'qmn', 'rst', 'ipu')),
 ('I_3b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_3c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'imu', 'rst', 'qpn')),
 ('I_3d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_4a',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_4b',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_4c',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_4d',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_5a',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_5b',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_5c',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_5d',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_6a',
  (('C', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_6b',
  (('C', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_6c',
  (('C', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_6d',
  (('C', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_7a',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_7b',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_7c',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_7d',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_8a',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_8b',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_8c',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_8d',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_9a',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_9b',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_9c',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_9d',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_10a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_10b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_10c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_10d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_16a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_16b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_16c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_16d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_17a',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_17b',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_17c',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_17d',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_18a',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_18b',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_18c',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_18d',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_19a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_19b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_19c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_19d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_20a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_20b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_20c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_20d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_21a',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_21b',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_21c',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_21d',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_22a',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_22b',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_22c',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_22d',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_23a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_23b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_23c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_23d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_24a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_24b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_24c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_24d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_25a',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_25b',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_25c',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_25d',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_26a',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_26b',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_26c',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_26d',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_27a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_27b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_27c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_27d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_28a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_28b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_28c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_28d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_29a',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_29b',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_29c',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_29d',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_30a',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_30b',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_30c',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_30d',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_31a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_31b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_31c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_31d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_32a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_32b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_32c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_32d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_33a',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_33b',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_33c',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_33d',
  (('C', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_34a',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_34b',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_34c',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_34d',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_35a',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_35b',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_35c',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_35d',
  (('C', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_36a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_36b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_36c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_36d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_37a',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_37b',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_37c',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_37d',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C5', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_38a',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_38b',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_38c',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_38d',
  (('C', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_11a',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_11b',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_11c',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_11d',
  (('C5', 'ij'), ('C5', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_12a',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_12b',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_12c',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_12d',
  (('C5', 'ij'), ('C', 'mk'), ('C5', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_14a',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_14b',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_14c',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_14d',
  (('C5', 'ij'), ('C5', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu')),
 ('I_15a',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'pr'), ('C5', 'qs'), ('C5', 'ut')),
  ('jkl', 'pmn', 'rst', 'iqu')),
 ('I_15b',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipn', 'rst', 'qmu')),
 ('I_15c',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'us'), ('C5', 'pt')),
  ('jkl', 'imp', 'rst', 'qun')),
 ('I_15d',
  (('C5', 'ij'), ('C', 'mk'), ('C', 'nl'), ('C', 'qr'), ('C5', 'ps'), ('C5', 'ut')),
  ('jkl', 'ipt', 'rsn', 'qmu'))]

CATALOG4_DEG2 = \
[('H_a', (('C', 'nj'), ('C', 'pk'), ('C', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_b', (('C5', 'nj'), ('C5', 'pk'), ('C5', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_c', (('C', 'nj'), ('C', 'pk'), ('C', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_d', (('C', 'nj'), ('C', 'pk'), ('C5', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_e', (('C5', 'nj'), ('C', 'pk'), ('C', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_f', (('C', 'nj'), ('C5', 'pk'), ('C', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_g', (('C', 'nj'), ('C', 'pk'), ('C5', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_h', (('C5', 'nj'), ('C', 'pk'), ('C', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_i', (('C', 'nj'), ('C5', 'pk'), ('C', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_j', (('C5', 'nj'), ('C', 'pk'), ('C5', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_k', (('C', 'nj'), ('C5', 'pk'), ('C5', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_l', (('C5', 'nj'), ('C5', 'pk'), ('C', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_m', (('C5', 'nj'), ('C5', 'pk'), ('C5', 'ql'), ('C', 'rm')), ('jklm', 'npqr')),
 ('H_n', (('C5', 'nj'), ('C5', 'pk'), ('C', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_o', (('C', 'nj'), ('C5', 'pk'), ('C5', 'ql'), ('C5', 'rm')), ('jklm', 'npqr')),
 ('H_p', (('C5', 'nj'), ('C', 'pk'), ('C5', 'ql'), ('C5', 'rm')), ('jklm', 'npqr'))]

PATTERNS4 = \
[('W_a',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'uvqr', 'npyz', 'wxst')),
 ('W_b',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'uvqr', 'nxyz', 'wpst')),
 ('W_c',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'nvqz', 'upsr', 'wxyt')),
 ('W_d',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'nvqz', 'uxsr', 'wpyt')),
 ('W_e',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'npst', 'uvqz', 'wxyr')),
 ('W_f',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'upqt', 'nvsr', 'wxyz')),
 ('W_g',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'upqt', 'nvsz', 'wxyr')),
 ('W_h',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'upsr', 'nvyt', 'wxqz')),
 ('W_i',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'nvsr', 'upyt', 'wxqz')),
 ('W_j',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'nvqr', 'uxyt', 'wpsz')),
 ('W_k',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'upqr', 'nvst', 'wxyz')),
 ('W_l',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'npsr', 'uvyz', 'wxqt')),
 ('W_m',
  (('X', 'nj'),
   ('X', 'pk'),
   ('X', 'ql'),
   ('X', 'rm'),
   ('X', 'uw'),
   ('X', 'vx'),
   ('X', 'sy'),
   ('X', 'tz')),
  ('jklm', 'npqt', 'uvsr', 'wxyz'))]

CATALOG4_T = \
[('T_a',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'uvqr', 'npyz', 'wxst')),
 ('T_b',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'uvqr', 'nxyz', 'wpst')),
 ('T_c',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'nvqz', 'upsr', 'wxyt')),
 ('T_d',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'nvqz', 'uxsr', 'wpyt')),
 ('T_e',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'npst', 'uvqz', 'wxyr')),
 ('T_f',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'upqt', 'nvsr', 'wxyz')),
 ('T_g',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'upqt', 'nvsz', 'wxyr')),
 ('T_h',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'upsr', 'nvyt', 'wxqz')),
 ('T_i',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'nvsr', 'upyt', 'wxqz')),
 ('T_j',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'nvqr', 'uxyt', 'wpsz')),
 ('T_k',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'upqr', 'nvst', 'wxyz')),
 ('T_l',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'npsr', 'uvyz', 'wxqt')),
 ('T_m',
  (('C', 'nj'),
   ('C', 'pk'),
   ('C', 'ql'),
   ('C', 'rm'),
   ('C', 'uw'),
   ('C', 'vx'),
   ('C', 'sy'),
   ('C', 'tz')),
  ('jklm', 'npqt', 'uvsr', 'wxyz'))]

CATALOG4_Y = \
[('Y_a',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'uvqr', 'npyz', 'wxst')),
 ('Y_b',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'uvqr', 'nxyz', 'wpst')),
 ('Y_c',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'nvqz', 'upsr', 'wxyt')),
 ('Y_d',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'nvqz', 'uxsr', 'wpyt')),
 ('Y_e',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'npst', 'uvqz', 'wxyr')),
 ('Y_f',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'upqt', 'nvsr', 'wxyz')),
 ('Y_g',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'upqt', 'nvsz', 'wxyr')),
 ('Y_h',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'upsr', 'nvyt', 'wxqz')),
 ('Y_i',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'nvsr', 'upyt', 'wxqz')),
 ('Y_j',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'nvqr', 'uxyt', 'wpsz')),
 ('Y_k',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'upqr', 'nvst', 'wxyz')),
 ('Y_l',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'npsr', 'uvyz', 'wxqt')),
 ('Y_m',
  (('C5', 'nj'),
   ('C5', 'pk'),
   ('C5', 'ql'),
   ('C5', 'rm'),
   ('C5', 'uw'),
   ('C5', 'vx'),
   ('C5', 'sy'),
   ('C5', 'tz')),
  ('jklm', 'npqt', 'uvsr', 'wxyz'))]

PATTERNS5 = \
[('F_1',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_2',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jt'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'oy'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_3',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_4',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_5',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_6',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jt'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'oy'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_7',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jt'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'oy'),
   ('X', 'pu')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_8',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jt'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'oy'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_9',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jy'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'ot'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_10',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'is'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'nx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_11',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'ix'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'ns'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_12',
  (('X', 'gq'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_13',
  (('X', 'gq'),
   ('X', 'hw'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'mr'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_14',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'ku'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_15',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'pu')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_16',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jt'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'oy'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_17',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jy'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'ot'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_18',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jo'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'ty'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_19',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'ty'),
   ('X', 'pu')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_20',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jt'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'oy'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_21',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jy'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'ot'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_22',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_23',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'ix'),
   ('X', 'jo'),
   ('X', 'kp'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'ns'),
   ('X', 'ty'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_24',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_25',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'pu')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_26',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'in'),
   ('X', 'jy'),
   ('X', 'kz'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sx'),
   ('X', 'to'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_27',
  (('X', 'gq'),
   ('X', 'hm'),
   ('X', 'ix'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'lv'),
   ('X', 'rw'),
   ('X', 'sn'),
   ('X', 'ty'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_28',
  (('X', 'gq'),
   ('X', 'hw'),
   ('X', 'in'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'lv'),
   ('X', 'rm'),
   ('X', 'sx'),
   ('X', 'ty'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_29',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'in'),
   ('X', 'jy'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sx'),
   ('X', 'to'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_30',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'ix'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sn'),
   ('X', 'ty'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_31',
  (('X', 'gl'),
   ('X', 'hr'),
   ('X', 'ix'),
   ('X', 'jy'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'mw'),
   ('X', 'sn'),
   ('X', 'to'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_32',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'is'),
   ('X', 'jy'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'nx'),
   ('X', 'to'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_33',
  (('X', 'gl'),
   ('X', 'hw'),
   ('X', 'is'),
   ('X', 'jo'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'rm'),
   ('X', 'nx'),
   ('X', 'ty'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_34',
  (('X', 'gl'),
   ('X', 'hw'),
   ('X', 'is'),
   ('X', 'jy'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'rm'),
   ('X', 'nx'),
   ('X', 'to'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_35',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'ix'),
   ('X', 'jt'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'sn'),
   ('X', 'oy'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_36',
  (('X', 'gl'),
   ('X', 'hw'),
   ('X', 'in'),
   ('X', 'jt'),
   ('X', 'kz'),
   ('X', 'qv'),
   ('X', 'rm'),
   ('X', 'sx'),
   ('X', 'oy'),
   ('X', 'up')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_37',
  (('X', 'gl'),
   ('X', 'hw'),
   ('X', 'ix'),
   ('X', 'jt'),
   ('X', 'kp'),
   ('X', 'qv'),
   ('X', 'rm'),
   ('X', 'sn'),
   ('X', 'oy'),
   ('X', 'uz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_38',
  (('X', 'gl'),
   ('X', 'hm'),
   ('X', 'ix'),
   ('X', 'jy'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'rw'),
   ('X', 'sn'),
   ('X', 'to'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_39',
  (('X', 'gl'),
   ('X', 'hw'),
   ('X', 'in'),
   ('X', 'jy'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'rm'),
   ('X', 'sx'),
   ('X', 'to'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz')),
 ('F_40',
  (('X', 'gl'),
   ('X', 'hw'),
   ('X', 'ix'),
   ('X', 'jo'),
   ('X', 'ku'),
   ('X', 'qv'),
   ('X', 'rm'),
   ('X', 'sn'),
   ('X', 'ty'),
   ('X', 'pz')),
  ('ghijk', 'lmnop', 'qrstu', 'vwxyz'))]

RELATIONS = \
{'deg4_P_A': [((-1, 'I_38b'), (1, 'I_35b')),
              ((-1, 'I_37b'), (1, 'I_36b')),
              ((-1, 'I_38c'), (1, 'I_35c')),
              ((-1, 'I_37c'), (1, 'I_36c')),
              ((-1, 'I_35c'), (-1, 'I_38b'), (1, 'I_35a'), (1, 'I_38a')),
              ((-1, 'I_36c'), (-1, 'I_37b'), (1, 'I_36a'), (1, 'I_37a')),
              ((-2, 'I_35d'), (-1, 'I_35c'), (1, 'I_35b')),
              ((1, 'I_35d'), (1, 'I_36d')),
              ((-1, 'I_36d'), (1, 'I_37d')),
              ((1, 'I_37d'), (1, 'I_38d')),
              ((2, 'I_38d'), (-1, 'I_37c'), (1, 'I_37b'))],
 'deg4_P_AB': [((-1, 'I_20b'), (1, 'I_20a'), (1, 'I_20d')),
               ((-1, 'I_19b'), (1, 'I_19a'), (1, 'I_19d')),
               ((-1, 'I_21b'), (1, 'I_21a'), (1, 'I_21d')),
               ((-1, 'I_22b'), (1, 'I_22a'), (1, 'I_22d')),
               ((-1, 'I_20b'),
                (-1, 'I_20c'),
                (-1, 'I_21b'),
                (-1, 'I_21c'),
                (2, 'I_20a'),
                (2, 'I_21a')),
               ((-2, 'I_19b'),
                (-2, 'I_21b'),
                (1, 'I_19a'),
                (1, 'I_19c'),
                (1, 'I_21a'),
                (1, 'I_21c')),
               ((-2, 'I_20b'),
                (-2, 'I_22b'),
                (1, 'I_20a'),
                (1, 'I_20c'),
                (1, 'I_22a'),
                (1, 'I_22c')),
               ((-1, 'I_19b'),
                (-1, 'I_19c'),
                (-1, 'I_22b'),
                (-1, 'I_22c'),
                (2, 'I_19a'),
                (2, 'I_22a'))],
 'deg4_P_AC': [((-1, 'I_16c'), (-1, 'I_16d'), (1, 'I_16a')),
               ((-1, 'I_10c'), (-1, 'I_10d'), (1, 'I_10a')),
               ((-1, 'I_18c'), (-1, 'I_18d'), (1, 'I_18a')),
               ((-1, 'I_17c'), (-1, 'I_17d'), (1, 'I_17a')),
               ((-1, 'I_10b'),
                (-1, 'I_10c'),
                (-1, 'I_18b'),
                (-1, 'I_18c'),
                (2, 'I_10a'),
                (2, 'I_18a')),
               ((-2, 'I_10c'),
                (-2, 'I_17c'),
                (1, 'I_10a'),
                (1, 'I_10b'),
                (1, 'I_17a'),
                (1, 'I_17b')),
               ((-2, 'I_16c'),
                (-2, 'I_18c'),
                (1, 'I_16a'),
                (1, 'I_16b'),
                (1, 'I_18a'),
                (1, 'I_18b')),
               ((-1, 'I_16b'),
                (-1, 'I_16c'),
                (-1, 'I_17b'),
                (-1, 'I_17c'),
                (2, 'I_16a'),
                (2, 'I_17a'))],
 'deg4_P_B': [((-1, 'I_29a'), (1, 'I_27a')),
              ((-1, 'I_30a'), (1, 'I_28a')),
              ((-1, 'I_29c'), (1, 'I_27c')),
              ((-1, 'I_30c'), (1, 'I_28c')),
              ((-1, 'I_27b'), (-1, 'I_29b'), (1, 'I_27a'), (1, 'I_29c')),
              ((-1, 'I_28b'), (-1, 'I_30b'), (1, 'I_28a'), (1, 'I_30c')),
              ((-2, 'I_27d'), (-1, 'I_27a'), (1, 'I_27c')),
              ((1, 'I_27d'), (1, 'I_28d')),
              ((1, 'I_28d'), (1, 'I_29d')),
              ((-1, 'I_29d'), (-1, 'I_30d')),
              ((-1, 'I_28a'), (1, 'I_28c'), (-2, 'I_30d'))],
 'deg4_P_BC': [((-1, 'I_23c'), (1, 'I_23b'), (1, 'I_23d')),
               ((-1, 'I_24c'), (1, 'I_24b'), (1, 'I_24d')),
               ((-1, 'I_26c'), (1, 'I_26b'), (1, 'I_26d')),
               ((-1, 'I_25c'), (1, 'I_25b'), (1, 'I_25d')),
               ((-2, 'I_23b'),
                (-2, 'I_25b'),
                (1, 'I_23a'),
                (1, 'I_23c'),
                (1, 'I_25a'),
                (1, 'I_25c')),
               ((-2, 'I_24b'),
                (-2, 'I_26b'),
                (1, 'I_24a'),
                (1, 'I_24c'),
                (1, 'I_26a'),
                (1, 'I_26c')),
               ((-2, 'I_24c'),
                (-2, 'I_25c'),
                (1, 'I_24a'),
                (1, 'I_24b'),
                (1, 'I_25a'),
                (1, 'I_25b')),
               ((-2, 'I_23c'),
                (-2, 'I_26c'),
                (1, 'I_23a'),
                (1, 'I_23b'),
                (1, 'I_26a'),
                (1, 'I_26b'))],
 'deg4_P_C': [((-1, 'I_34a'), (1, 'I_31a')),
              ((-1, 'I_33a'), (1, 'I_32a')),
              ((-1, 'I_34b'), (1, 'I_31b')),
              ((-1, 'I_33b'), (1, 'I_32b')),
              ((-1, 'I_32a'), (-1, 'I_33b'), (1, 'I_32c'), (1, 'I_33c')),
              ((-1, 'I_31a'), (-1, 'I_34b'), (1, 'I_31c'), (1, 'I_34c')),
              ((-2, 'I_31d'), (-1, 'I_31b'), (1, 'I_31a')),
              ((1, 'I_31d'), (1, 'I_32d')),
              ((-1, 'I_32d'), (1, 'I_33d')),
              ((-1, 'I_33d'), (-1, 'I_34d')),
              ((-1, 'I_32b'), (1, 'I_32a'), (2, 'I_34d'))],
 'deg4_P_all': [((-1, 'I_5b'), (-1, 'I_5d'), (-1, 'I_8b'), (-1, 'I_8d'), (1, 'I_5c'), (1, 'I_8c')),
                ((-1, 'I_3b'), (-1, 'I_3d'), (-1, 'I_9b'), (-1, 'I_9d'), (1, 'I_3c'), (1, 'I_9c')),
                ((-1, 'I_5a'), (-1, 'I_9a'), (1, 'I_5c'), (1, 'I_5d'), (1, 'I_9c'), (1, 'I_9d')),
                ((-2, 'I_7a'),
                 (-1, 'I_4b'),
                 (-1, 'I_4d'),
                 (-1, 'I_6a'),
                 (-1, 'I_6b'),
                 (-1, 'I_8a'),
                 (-1, 'I_8d'),
                 (1, 'I_4c'),
                 (1, 'I_7b'),
                 (1, 'I_7c'),
                 (1, 'I_8b'),
                 (2, 'I_6c')),
                ((-1, 'I_2a'),
                 (-1, 'I_2b'),
                 (-1, 'I_4a'),
                 (-1, 'I_4b'),
                 (-1, 'I_6a'),
                 (-1, 'I_6b'),
                 (-1, 'I_7a'),
                 (-1, 'I_7b'),
                 (2, 'I_2c'),
                 (2, 'I_4c'),
                 (2, 'I_6c'),
                 (2, 'I_7c')),
                ((-2, 'I_2a'),
                 (-2, 'I_4a'),
                 (-2, 'I_5a'),
                 (-2, 'I_9a'),
                 (1, 'I_2b'),
                 (1, 'I_2c'),
                 (1, 'I_4b'),
                 (1, 'I_4c'),
                 (1, 'I_5b'),
                 (1, 'I_5c'),
                 (1, 'I_9b'),
                 (1, 'I_9c')),
                ((-1, 'I_2a'),
                 (-1, 'I_2c'),
                 (-1, 'I_5a'),
                 (-1, 'I_5c'),
                 (-1, 'I_7a'),
                 (-1, 'I_7c'),
                 (-1, 'I_8a'),
                 (-1, 'I_8c'),
                 (2, 'I_2b'),
                 (2, 'I_5b'),
                 (2, 'I_7b'),
                 (2, 'I_8b')),
                ((-1, 'I_3a'),
                 (-1, 'I_3b'),
                 (-1, 'I_5a'),
                 (-1, 'I_5b'),
                 (-1, 'I_8a'),
                 (-1, 'I_8b'),
                 (-1, 'I_9a'),
                 (-1, 'I_9b'),
                 (2, 'I_3c'),
                 (2, 'I_5c'),
                 (2, 'I_8c'),
                 (2, 'I_9c')),
                ((-2, 'I_3a'),
                 (-2, 'I_6a'),
                 (-2, 'I_7a'),
                 (-2, 'I_8a'),
                 (1, 'I_3b'),
                 (1, 'I_3c'),
                 (1, 'I_6b'),
                 (1, 'I_6c'),
                 (1, 'I_7b'),
                 (1, 'I_7c'),
                 (1, 'I_8b'),
                 (1, 'I_8c'))],
 'deg4_P_none': [((-1, 'I_12a'), (1, 'I_14a')),
                 ((-1, 'I_15a'), (1, 'I_11a')),
                 ((-1, 'I_11b'), (1, 'I_12b')),
                 ((-1, 'I_15b'), (1, 'I_14b')),
                 ((-1, 'I_11c'), (1, 'I_14c')),
                 ((-1, 'I_15c'), (1, 'I_12c')),
                 ((1, 'I_11d'), (1, 'I_12d')),
                 ((-1, 'I_12d'), (1, 'I_14d')),
                 ((-1, 'I_14d'), (-1, 'I_15d')),
                 ((-1, 'I_11c'), (-1, 'I_12c'), (1, 'I_11a'), (1, 'I_12a')),
                 ((-1, 'I_11b'), (-1, 'I_14b'), (1, 'I_11c'), (1, 'I_12c'))],
 'u1sl4_twelve': [((-1, 'I_5c'), (-1, 'I_8c'), (1, 'I_5b'), (1, 'I_5d'), (1, 'I_8b'), (1, 'I_8d')),
                  ((-1, 'I_3c'), (-1, 'I_9c'), (1, 'I_3b'), (1, 'I_3d'), (1, 'I_9b'), (1, 'I_9d')),
                  ((-1, 'I_5c'),
                   (-1, 'I_5d'),
                   (-1, 'I_9c'),
                   (-1, 'I_9d'),
                   (1, 'I_5a'),
                   (1, 'I_9a')),
                  ((-1, 'I_6c'),
                   (-1, 'I_6d'),
                   (-1, 'I_7c'),
                   (-1, 'I_7d'),
                   (1, 'I_6a'),
                   (1, 'I_7a')),
                  ((-1, 'I_4c'), (-1, 'I_6c'), (1, 'I_4b'), (1, 'I_4d'), (1, 'I_6b'), (1, 'I_6d')),
                  ((-1, 'I_4b'), (-1, 'I_9b'), (1, 'I_4a'), (1, 'I_4d'), (1, 'I_9a'), (1, 'I_9d')),
                  ((-1, 'I_7b'), (-1, 'I_8b'), (1, 'I_7a'), (1, 'I_7d'), (1, 'I_8a'), (1, 'I_8d')),
                  ((-1, 'I_3b'), (-1, 'I_6b'), (1, 'I_3a'), (1, 'I_3d'), (1, 'I_6a'), (1, 'I_6d')),
                  ((-1, 'I_3c'),
                   (-1, 'I_3d'),
                   (-1, 'I_8c'),
                   (-1, 'I_8d'),
                   (1, 'I_3a'),
                   (1, 'I_8a')),
                  ((-1, 'I_2b'), (-1, 'I_5b'), (1, 'I_2a'), (1, 'I_2d'), (1, 'I_5a'), (1, 'I_5d')),
                  ((-1, 'I_2c'),
                   (-1, 'I_2d'),
                   (-1, 'I_4c'),
                   (-1, 'I_4d'),
                   (1, 'I_2a'),
                   (1, 'I_4a')),
                  ((-1, 'I_2c'), (-1, 'I_7c'), (1, 'I_2b'), (1, 'I_2d'), (1, 'I_7b'), (1, 'I_7d'))]}

