/* Fuzzing driver for T_POS_IsConstraintValid. Generated by motif. */
#include "motif_runtime.h"

typedef unsigned char flag;
typedef double asn1Real;
typedef int My2ndInt;
typedef struct { int nCount; char arr[10]; } T_POS_label;
typedef struct { int nCount; int arr[4]; } T_ARR;
typedef struct { int a; int b; } T_SET;
typedef struct { int nCount; T_SET arr[3]; } T_SETOF;
typedef struct { int nCount; int arr[2011]; } T_POS_subTypeArray;
typedef enum { T_POS_NONE = 0, longitude_PRESENT = 1, latitude_PRESENT = 2, height_PRESENT = 3, subTypeArray_PRESENT = 4, label_PRESENT = 5, intArray_PRESENT = 6, myIntSet_PRESENT = 7, myIntSetOf_PRESENT = 8, anInt_PRESENT = 9 } T_POS_selection;
typedef struct { T_POS_selection kind; union { asn1Real longitude; asn1Real latitude; asn1Real height; My2ndInt anInt; T_POS_label label; T_ARR intArray; T_SET myIntSet; T_SETOF myIntSetOf; T_POS_subTypeArray subTypeArray; } u; } T_POS;

flag T_POS_IsConstraintValid(const T_POS *pVal, int *pErrCode);
flag mut_T_POS_IsConstraintValid(const T_POS *pVal, int *pErrCode);

int main(int argc, char **argv) {
  load_file(argc > 1 ? argv[1] : 0, 8060);

  int ret = 0;
  /* Variables for the original function */
  T_POS origin_pVal;
  int origin_pErrCode;
  /* Variables for the mutated function */
  T_POS mut_pVal;
  int mut_pErrCode;
  /* Variables for the return values */
  flag origin_return;
  flag mut_return;

  get_value(&origin_pVal, sizeof(origin_pVal));
  get_value(&origin_pErrCode, sizeof(origin_pErrCode));
  motif_checkpoint("CALL_ORIG");
  origin_return = T_POS_IsConstraintValid(&origin_pVal, &origin_pErrCode);
  motif_checkpoint("RET_ORIG");

  seek_data_index(0);
  get_value(&mut_pVal, sizeof(mut_pVal));
  get_value(&mut_pErrCode, sizeof(mut_pErrCode));
  motif_checkpoint("CALL_MUT");
  mut_return = mut_T_POS_IsConstraintValid(&mut_pVal, &mut_pErrCode);
  motif_checkpoint("RET_MUT");

  ret |= compare_value(&origin_pVal, &mut_pVal, sizeof(origin_pVal));
  ret |= compare_value(&origin_pErrCode, &mut_pErrCode, sizeof(origin_pErrCode));
  ret |= compare_value(&origin_return, &mut_return, sizeof(origin_return));
  if (ret != 0) {
    motif_checkpoint("DIFF");
    safe_abort();
  }
  motif_checkpoint("EQ");
  return 0;
}
