# BlockSum モジュール
