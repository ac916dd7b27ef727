# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

from icosa_fibres.cli import main


raise SystemExit(main())
