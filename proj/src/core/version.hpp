#pragma once

#define NORMCERT_VERSION "1.0.0"
